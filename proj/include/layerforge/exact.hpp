#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"

namespace layerforge {

enum class ExactStatus {
    kOptimal,
    kTimeout,     // solution (if any) is the best found, not proven optimal
    kInfeasible,  // no feasible layering fits the layer bound
};

struct ExactOptions {
    std::chrono::duration<double> time_limit = std::chrono::seconds(60);
    /// Seed the search with the heuristic and the two-phase baseline.
    bool warm_start = true;
    std::uint64_t seed = 0;
};

struct ExactResult {
    ExactStatus status = ExactStatus::kOptimal;
    std::optional<GlpSolution> solution;
    long search_nodes = 0;
};

/// Minimum-cost feasible layering by branch and bound. Without a layer bound,
/// nodes with one neighbour are fixed next to it and the search branches on
/// the direction of each remaining node pair; a full set of directions is
/// priced by a minimum-length layering. With a bound every node's layer is
/// branched on directly.
ExactResult solve_exact(const Graph& g, const GlpWeights& w, const ExactOptions& options = {});

class OracleSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr NodeId kOracleMaxNodes = 8;

/// Exhaustive enumeration of [1, b or n]^V. Returns the lexicographically
/// first optimal layering, or nullopt if none is feasible. Throws
/// OracleSizeError above kOracleMaxNodes nodes.
std::optional<GlpSolution> brute_force_oracle(const Graph& g, const GlpWeights& w);

}  // namespace layerforge
