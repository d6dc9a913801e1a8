#pragma once

#include <stdexcept>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"

namespace layerforge {

class CyclicGraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sources on layer 1, every other node one below its deepest predecessor.
/// Throws CyclicGraphError on a directed cycle.
Layering longest_path_init(const Graph& g);

struct SimplexStats {
    long pivots = 0;
    bool hit_pivot_cap = false;  // result may be suboptimal when set
};

/// Valid layering of an acyclic graph minimizing the weighted total edge
/// length, by network simplex over a tight spanning tree per component.
/// Each weakly connected component starts at layer 1. Throws
/// CyclicGraphError on a directed cycle.
Layering min_length_layering(const Graph& g, SimplexStats* stats = nullptr);

/// Weighted sum of L(target) - L(source).
std::int64_t total_edge_length(const Graph& g, const Layering& L);

}  // namespace layerforge
