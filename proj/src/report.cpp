#include "layerforge/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace layerforge {

namespace {

using Json = nlohmann::ordered_json;

Json weights_json(const GlpWeights& w) {
    Json out;
    out["len"] = w.len;
    if (w.rev_infinite)
        out["rev"] = "inf";
    else
        out["rev"] = w.rev;
    out["max_layers"] = w.max_layers ? Json(*w.max_layers) : Json(nullptr);
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string layer_json(const Graph& g, const MethodRun& run, const GlpWeights& weights,
                       const NormalizeReport& normalization) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["method"] = method_label(run.method);
    doc["weights"] = weights_json(weights);
    doc["status"] = status_label(run.status);
    Json layers = Json::object();
    Json reversed = Json::array();
    if (run.solution) {
        for (NodeId v = 0; v < g.node_count(); ++v) layers[g.label(v)] = run.solution->layering[v];
        for (EdgeId e : run.solution->reversed)
            reversed.push_back({g.label(g.edge(e).source), g.label(g.edge(e).target)});
    }
    doc["layers"] = layers;
    doc["reversed"] = reversed;
    const MetricsReport& m = run.metrics;
    doc["metrics"] = {
        {"nodes", g.node_count()},
        {"edges", g.edge_count()},
        {"reversed_count", m.reversed_count},
        {"edge_length_sum", m.edge_length_sum},
        {"dummy_count", m.dummy_count},
        {"layer_count", m.layer_count},
        {"max_layer_width", m.max_layer_width},
        {"est_area", m.est_area},
        {"est_area_per_node", m.est_area_per_node(g.node_count())},
        {"est_aspect_ratio", m.est_aspect_ratio()},
    };
    if (run.solution && run.solution->cost.value())
        doc["objective"] = *run.solution->cost.value();
    else
        doc["objective"] = nullptr;
    Json dropped = Json::array();
    for (NodeId v : normalization.dropped_self_loops) dropped.push_back(g.label(v));
    Json merged = Json::array();
    for (const MergedEdge& me : normalization.merged)
        merged.push_back({{"source", g.label(me.source)},
                          {"target", g.label(me.target)},
                          {"count", me.merged_count},
                          {"weight", me.total_weight}});
    doc["normalization"] = {{"dropped_self_loops", dropped}, {"merged_edges", merged}};
    return doc.dump(2) + "\n";
}

std::string render_svg(const Graph& g, const Layering& L) {
    constexpr int kMargin = 40, kStepX = 80, kStepY = 80, kRadius = 14;
    const Layering C = L.empty() ? L : L.canonical();
    std::map<Layer, std::vector<NodeId>> bands;
    for (NodeId v = 0; v < g.node_count(); ++v) bands[C[v]].push_back(v);
    std::size_t width_nodes = 0;
    for (const auto& [layer, members] : bands) width_nodes = std::max(width_nodes, members.size());

    std::vector<int> x(static_cast<std::size_t>(g.node_count())), y(x.size());
    for (const auto& [layer, members] : bands)
        for (std::size_t i = 0; i < members.size(); ++i) {
            x[static_cast<std::size_t>(members[i])] = kMargin + static_cast<int>(i) * kStepX;
            y[static_cast<std::size_t>(members[i])] = kMargin + (layer - 1) * kStepY;
        }
    const int width = 2 * kMargin + std::max(0, static_cast<int>(width_nodes) - 1) * kStepX;
    const int height = 2 * kMargin + std::max(0, static_cast<int>(bands.size()) - 1) * kStepY;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<title>layer assignment (debug view, not a final drawing)</title>\n";
    out << "<g class=\"bands\" fill=\"#f2f2f2\">\n";
    for (const auto& [layer, members] : bands)
        out << "<rect x=\"0\" y=\"" << kMargin + (layer - 1) * kStepY - kStepY / 2 + 4 << "\" width=\"" << width
            << "\" height=\"" << kStepY - 8 << "\"/>\n";
    out << "</g>\n<g class=\"edges\" stroke=\"#333\" stroke-width=\"1.5\">\n";
    for (const Edge& e : g.edges()) {
        const auto s = static_cast<std::size_t>(e.source), t = static_cast<std::size_t>(e.target);
        out << "<line x1=\"" << x[s] << "\" y1=\"" << y[s] << "\" x2=\"" << x[t] << "\" y2=\"" << y[t] << '"';
        if (C[e.source] > C[e.target]) out << " class=\"reversed\" stroke-width=\"3\" stroke-dasharray=\"6,4\"";
        out << "/>\n";
    }
    out << "</g>\n<g class=\"nodes\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto i = static_cast<std::size_t>(v);
        out << "<circle cx=\"" << x[i] << "\" cy=\"" << y[i] << "\" r=\"" << kRadius
            << "\" fill=\"#fff\" stroke=\"#000\"/>\n";
        out << "<text x=\"" << x[i] << "\" y=\"" << y[i] + 4 << "\">" << xml_escape(g.label(v)) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace layerforge
