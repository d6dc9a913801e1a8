#pragma once

#include <optional>
#include <string_view>

#include "layerforge/exact.hpp"
#include "layerforge/graph.hpp"
#include "layerforge/heuristic.hpp"
#include "layerforge/layering.hpp"

namespace layerforge {

enum class Method {
    kEaGa,                // greedy cycle removal, then minimum-length layering
    kHeuristic,           // GLP heuristic
    kHeuristicNoImprove,  // GLP heuristic without the improvement step
    kExact,               // branch and bound
};

std::string_view method_label(Method m);
std::optional<Method> parse_method(std::string_view text);

/// Two-phase baseline: reverse the greedy FAS, then minimum-length layering.
GlpSolution solve_eaga(const Graph& g, const GlpWeights& report);

enum class RunStatus { kOptimal, kHeuristic, kTimeout, kInfeasible };
std::string_view status_label(RunStatus s);

struct MethodOptions {
    GlpWeights weights;
    std::uint64_t seed = 0;
    double timeout_seconds = 60.0;
};

struct MethodRun {
    Method method = Method::kEaGa;
    RunStatus status = RunStatus::kHeuristic;
    std::optional<GlpSolution> solution;  // canonical layering; empty only when infeasible
    MetricsReport metrics;
    double wall_ms = 0;  // layering phases only
};

/// Runs one method on a graph (normalized first).
MethodRun run_method(const Graph& g, Method method, const MethodOptions& options);

}  // namespace layerforge
