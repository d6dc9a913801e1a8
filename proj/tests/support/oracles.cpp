#include "oracles.hpp"

#include <functional>
#include <limits>
#include <map>

namespace oracle {

Graph make_graph(std::initializer_list<std::pair<const char*, const char*>> edges) {
    Graph g;
    std::map<std::string, layerforge::NodeId> ids;
    auto node = [&](const char* name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        const auto id = g.add_node(name);
        ids.emplace(name, id);
        return id;
    };
    for (const auto& [u, v] : edges) {
        const auto a = node(u);
        const auto b = node(v);
        g.add_edge(a, b);
    }
    return g;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node();
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Score score(const Graph& g, const std::vector<Layer>& L) {
    Score s;
    for (const auto& e : g.edges()) {
        const std::int64_t d = static_cast<std::int64_t>(L[static_cast<std::size_t>(e.target)]) -
                               L[static_cast<std::size_t>(e.source)];
        if (d == 0) s.feasible = false;
        s.length += e.weight * (d < 0 ? -d : d);
        if (d < 0) s.reversed += e.weight;
    }
    return s;
}

Score score(const Graph& g, const layerforge::Layering& L) {
    return score(g, std::vector<Layer>(L.values().begin(), L.values().end()));
}

namespace {

// Calls visit(L) for every assignment in [1, top]^n.
void enumerate(int n, int top, const std::function<void(const std::vector<Layer>&)>& visit) {
    std::vector<Layer> L(static_cast<std::size_t>(n), 1);
    if (n == 0) {
        visit(L);
        return;
    }
    for (;;) {
        visit(L);
        int i = 0;
        while (i < n && L[static_cast<std::size_t>(i)] == top) L[static_cast<std::size_t>(i++)] = 1;
        if (i == n) return;
        ++L[static_cast<std::size_t>(i)];
    }
}

}  // namespace

GlpOptimum glp_brute_force(const Graph& g, std::int64_t w_len, std::int64_t w_rev, int top) {
    GlpOptimum best;
    best.cost = std::numeric_limits<std::int64_t>::max();
    enumerate(g.node_count(), top > 0 ? top : std::max(1, static_cast<int>(g.node_count())), [&](const auto& L) {
        const Score s = score(g, L);
        if (!s.feasible) return;
        const std::int64_t c = w_len * s.length + w_rev * s.reversed;
        if (c < best.cost) best = {c, s.length, s.reversed, true};
    });
    return best;
}

GlpOptimum glp_brute_force_lex(const Graph& g, int top) {
    GlpOptimum best;
    enumerate(g.node_count(), top > 0 ? top : std::max(1, static_cast<int>(g.node_count())), [&](const auto& L) {
        const Score s = score(g, L);
        if (!s.feasible) return;
        if (!best.feasible || std::pair(s.reversed, s.length) < std::pair(best.reversed, best.length))
            best = {0, s.length, s.reversed, true};
    });
    return best;
}

std::int64_t dlp_brute_force(const Graph& g) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    enumerate(g.node_count(), std::max(1, static_cast<int>(g.node_count())), [&](const auto& L) {
        const Score s = score(g, L);
        if (s.feasible && s.reversed == 0) best = std::min(best, s.length);
    });
    return best;
}

bool acyclic(const Graph& g) {
    enum { kWhite, kGrey, kBlack };
    std::vector<int> colour(static_cast<std::size_t>(g.node_count()), kWhite);
    std::function<bool(layerforge::NodeId)> visit = [&](layerforge::NodeId v) {
        colour[static_cast<std::size_t>(v)] = kGrey;
        for (auto e : g.out_edges(v)) {
            const auto w = g.edge(e).target;
            if (colour[static_cast<std::size_t>(w)] == kGrey) return false;
            if (colour[static_cast<std::size_t>(w)] == kWhite && !visit(w)) return false;
        }
        colour[static_cast<std::size_t>(v)] = kBlack;
        return true;
    };
    for (layerforge::NodeId v = 0; v < g.node_count(); ++v)
        if (colour[static_cast<std::size_t>(v)] == kWhite && !visit(v)) return false;
    return true;
}

Graph orient_by(const Graph& g, const std::vector<Layer>& L) {
    Graph out;
    for (layerforge::NodeId v = 0; v < g.node_count(); ++v) out.add_node(g.label(v));
    for (const auto& e : g.edges()) {
        if (L[static_cast<std::size_t>(e.source)] <= L[static_cast<std::size_t>(e.target)])
            out.add_edge(e.source, e.target, e.weight);
        else
            out.add_edge(e.target, e.source, e.weight);
    }
    return out;
}

}  // namespace oracle
