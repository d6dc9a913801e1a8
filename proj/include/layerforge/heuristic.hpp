#pragma once

#include <cstdint>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"

namespace layerforge {

/// Weights the improvement step scores moves with, independent of the
/// weights a caller reports the final objective under.
inline constexpr GlpWeights kImprovementWeights{1, 5, false, std::nullopt};

/// Greedy linear arrangement: starting from `start`, repeatedly takes the
/// frontier node with the lowest score (unassigned minus assigned incident
/// edges, lowest id on ties) and puts it left of the arrangement when more of
/// its assigned edges leave it than enter it, right otherwise. Every node gets
/// its own index; the left side counts down from -1, the right side up from 0.
/// Nodes unreachable from `start` keep index 0 and must not exist (the
/// caller passes one weakly connected component).
Layering construct_layering_from(const Graph& g, NodeId start);

/// As above with the start node drawn uniformly from `seed`.
Layering construct_layering(const Graph& g, std::uint64_t seed);

/// Sets of v's neighbours relative to a layering (lower index = "top").
struct Neighbourhood {
    std::vector<NodeId> top_suc;  // v -> w, L(w) < L(v)
    std::vector<NodeId> bot_suc;  // v -> w, L(w) > L(v)
    std::vector<NodeId> top_pre;  // w -> v, L(w) < L(v)
    std::vector<NodeId> bot_pre;  // w -> v, L(w) > L(v)
};
Neighbourhood neighbourhood(const Graph& g, const Layering& L, NodeId v);

/// Number of layers to lift v so its upward outgoing edges point down.
std::int64_t compute_move(const Graph& g, const Layering& L, NodeId v);

/// Estimated gain of lifting v by m layers to layer x.
std::int64_t compute_profit(const Graph& g, const Layering& L, NodeId v, std::int64_t m, std::int64_t x,
                            const GlpWeights& w = kImprovementWeights);

struct ImproveStats {
    long applied = 0;
    long rejected = 0;  // dequeued moves failing the feasibility/gain check
};

/// Priority-queue local search lifting nodes by their move distance while the
/// exact objective under `w` strictly decreases. Output stays feasible.
Layering improve_layering(const Graph& g, const Layering& L, const GlpWeights& w = kImprovementWeights,
                          ImproveStats* stats = nullptr);

struct HeuristicOptions {
    std::uint64_t seed = 0;
    bool skip_improvement = false;
};

struct HeuristicTimings {
    double construction_ms = 0;
    double improvement_ms = 0;
    double total_ms = 0;
};

struct HeuristicResult {
    GlpSolution solution;
    HeuristicTimings timings;
    ImproveStats improve;
};

/// Full pipeline: peel leaves, construct per component, orient, minimize
/// length, improve, orient again, reattach leaves, minimize length.
/// The returned layering is canonical; its cost is scored under `report`.
HeuristicResult solve_glp_heuristic(const Graph& g, const HeuristicOptions& options = {},
                                    const GlpWeights& report = kImprovementWeights);

}  // namespace layerforge
