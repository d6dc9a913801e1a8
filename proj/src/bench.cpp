#include "layerforge/bench.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace layerforge {

namespace {

std::string weight_text(const std::optional<std::int64_t>& w) { return w ? std::to_string(*w) : "inf"; }

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::vector<std::optional<std::int64_t>> parse_sweep(const std::string& text) {
    std::string body = text;
    if (body.rfind("wrev=", 0) == 0) body = body.substr(5);
    std::vector<std::optional<std::int64_t>> out;
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "inf") {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size() || v < 1)
            throw std::invalid_argument("bad sweep value '" + item + "'");
        out.emplace_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty sweep");
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<NamedGraph>& corpus, const BenchOptions& options) {
    if (corpus.empty()) throw std::invalid_argument("empty corpus");
    if (options.methods.empty() || options.w_rev.empty()) throw std::invalid_argument("nothing to run");
    const std::size_t per_graph = options.methods.size() * options.w_rev.size();
    std::vector<BenchRow> rows(corpus.size() * per_graph);

    auto run_graph = [&](std::size_t gi) {
        const Graph g = is_normalized(corpus[gi].graph) ? corpus[gi].graph : normalize(corpus[gi].graph).graph;
        std::size_t slot = gi * per_graph;
        for (Method method : options.methods) {
            for (const auto& w_rev : options.w_rev) {
                MethodOptions mo;
                mo.weights = w_rev ? GlpWeights::finite(options.w_len, *w_rev)
                                   : GlpWeights::infinite_reversal(options.w_len);
                mo.weights.max_layers = options.max_layers;
                mo.seed = options.seed;
                mo.timeout_seconds = options.timeout_per_graph;
                const MethodRun run = run_method(g, method, mo);
                BenchRow& row = rows[slot++];
                row.graph_id = corpus[gi].id;
                row.method = method;
                row.w_len = options.w_len;
                row.w_rev = w_rev;
                row.nodes = g.node_count();
                row.edges = g.edge_count();
                row.metrics = run.metrics;
                if (run.solution) row.objective = run.solution->cost.value();
                row.wall_time_ms = options.timing ? run.wall_ms : 0.0;
                row.status = run.status;
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t gi = 0; gi < corpus.size(); ++gi) run_graph(gi);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j)
        workers.emplace_back([&] {
            for (std::size_t gi = next++; gi < corpus.size(); gi = next++) {
                try {
                    run_graph(gi);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows, const BenchOptions& options) {
    std::vector<BenchAggregate> out;
    for (Method method : options.methods) {
        for (const auto& w_rev : options.w_rev) {
            BenchAggregate a;
            a.method = method;
            a.w_len = options.w_len;
            a.w_rev = w_rev;
            for (const BenchRow& r : rows) {
                if (r.method != method || r.w_rev != w_rev || r.status == RunStatus::kInfeasible) continue;
                ++a.graphs;
                if (r.status == RunStatus::kTimeout) ++a.timeouts;
                a.mean_reversed += static_cast<double>(r.metrics.reversed_count);
                a.mean_dummies += static_cast<double>(r.metrics.dummy_count);
                a.mean_edge_length += static_cast<double>(r.metrics.edge_length_sum);
                a.mean_layers += static_cast<double>(r.metrics.layer_count);
                a.mean_max_width += static_cast<double>(r.metrics.max_layer_width);
                a.mean_est_area += static_cast<double>(r.metrics.est_area);
                a.mean_wall_time_ms += r.wall_time_ms;
            }
            if (a.graphs > 0) {
                const auto n = static_cast<double>(a.graphs);
                for (double* v : {&a.mean_reversed, &a.mean_dummies, &a.mean_edge_length, &a.mean_layers,
                                  &a.mean_max_width, &a.mean_est_area, &a.mean_wall_time_ms})
                    *v /= n;
            }
            out.push_back(a);
        }
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows, const std::vector<BenchAggregate>& aggregates) {
    std::ostringstream out;
    out << "# " << kBenchVersion << '\n';
    out << "graph_id,method,w_len,w_rev,nodes,edges,reversed_count,dummy_count,edge_length_sum,layer_count,"
           "max_layer_width,est_area,est_aspect_ratio,objective,wall_time_ms,status\n";
    for (const BenchRow& r : rows) {
        out << csv_field(r.graph_id) << ',' << method_label(r.method) << ',' << r.w_len << ',' << weight_text(r.w_rev)
            << ',' << r.nodes << ',' << r.edges << ',' << r.metrics.reversed_count << ',' << r.metrics.dummy_count
            << ',' << r.metrics.edge_length_sum << ',' << r.metrics.layer_count << ',' << r.metrics.max_layer_width
            << ',' << r.metrics.est_area << ',' << fixed(r.metrics.est_aspect_ratio(), 4) << ','
            << (r.objective ? std::to_string(*r.objective) : "") << ',' << fixed(r.wall_time_ms, 3) << ','
            << status_label(r.status) << '\n';
    }
    out << "\n# aggregate\n";
    out << "method,w_len,w_rev,graphs,timeouts,mean_reversed,mean_dummies,mean_edge_length,mean_layers,"
           "mean_max_width,mean_est_area,mean_wall_time_ms\n";
    for (const BenchAggregate& a : aggregates) {
        out << method_label(a.method) << ',' << a.w_len << ',' << weight_text(a.w_rev) << ',' << a.graphs << ','
            << a.timeouts << ',' << fixed(a.mean_reversed, 4) << ',' << fixed(a.mean_dummies, 4) << ','
            << fixed(a.mean_edge_length, 4) << ',' << fixed(a.mean_layers, 4) << ',' << fixed(a.mean_max_width, 4)
            << ',' << fixed(a.mean_est_area, 4) << ',' << fixed(a.mean_wall_time_ms, 3) << '\n';
    }
    return out.str();
}

std::string aggregate_table(const std::vector<BenchAggregate>& aggregates) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %6s %6s %7s %9s %9s %9s %9s %10s\n", "method", "w_len", "w_rev", "graphs",
                  "reversed", "dummies", "layers", "width", "time_ms");
    out << line;
    for (const BenchAggregate& a : aggregates) {
        std::snprintf(line, sizeof line, "%-10s %6lld %6s %7lld %9.2f %9.2f %9.2f %9.2f %10.2f\n",
                      std::string(method_label(a.method)).c_str(), static_cast<long long>(a.w_len),
                      weight_text(a.w_rev).c_str(), static_cast<long long>(a.graphs), a.mean_reversed,
                      a.mean_dummies, a.mean_layers, a.mean_max_width, a.mean_wall_time_ms);
        out << line;
    }
    return out.str();
}

}  // namespace layerforge
