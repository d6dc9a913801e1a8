#include "layerforge/methods.hpp"

#include <chrono>

#include "layerforge/cycle_removal.hpp"
#include "layerforge/network_simplex.hpp"

namespace layerforge {

std::string_view method_label(Method m) {
    switch (m) {
        case Method::kEaGa: return "eaga";
        case Method::kHeuristic: return "glph";
        case Method::kHeuristicNoImprove: return "glph-star";
        case Method::kExact: return "glpx";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view text) {
    for (Method m : {Method::kEaGa, Method::kHeuristic, Method::kHeuristicNoImprove, Method::kExact})
        if (method_label(m) == text) return m;
    if (text == "glph*") return Method::kHeuristicNoImprove;
    return std::nullopt;
}

std::string_view status_label(RunStatus s) {
    switch (s) {
        case RunStatus::kOptimal: return "optimal";
        case RunStatus::kHeuristic: return "heuristic";
        case RunStatus::kTimeout: return "timeout";
        case RunStatus::kInfeasible: return "infeasible";
    }
    return "?";
}

GlpSolution solve_eaga(const Graph& input, const GlpWeights& report) {
    const Graph g = is_normalized(input) ? input : normalize(input).graph;
    const VertexOrder order = greedy_fas_order(g);
    const std::vector<EdgeId> back = backward_edges(g, order);
    Graph oriented;
    for (NodeId v = 0; v < g.node_count(); ++v) oriented.add_node(g.label(v));
    std::size_t next_back = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (next_back < back.size() && back[next_back] == e) {
            oriented.add_edge(ed.target, ed.source, ed.weight);
            ++next_back;
        } else {
            oriented.add_edge(ed.source, ed.target, ed.weight);
        }
    }
    const Layering L = min_length_layering(normalize(oriented).graph).canonical();
    return objective(g, L, report);
}

MethodRun run_method(const Graph& input, Method method, const MethodOptions& options) {
    const Graph g = is_normalized(input) ? input : normalize(input).graph;
    MethodRun run;
    run.method = method;
    const auto started = std::chrono::steady_clock::now();
    switch (method) {
        case Method::kEaGa:
            run.solution = solve_eaga(g, options.weights);
            run.status = RunStatus::kHeuristic;
            break;
        case Method::kHeuristic:
        case Method::kHeuristicNoImprove: {
            HeuristicOptions h{options.seed, method == Method::kHeuristicNoImprove};
            run.solution = solve_glp_heuristic(g, h, options.weights).solution;
            run.status = RunStatus::kHeuristic;
            break;
        }
        case Method::kExact: {
            ExactOptions x;
            x.time_limit = std::chrono::duration<double>(options.timeout_seconds);
            x.seed = options.seed;
            ExactResult r = solve_exact(g, options.weights, x);
            run.solution = std::move(r.solution);
            run.status = r.status == ExactStatus::kOptimal   ? RunStatus::kOptimal
                         : r.status == ExactStatus::kTimeout ? RunStatus::kTimeout
                                                             : RunStatus::kInfeasible;
            break;
        }
    }
    run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (run.solution) run.metrics = metrics(g, run.solution->layering);
    return run;
}

}  // namespace layerforge
