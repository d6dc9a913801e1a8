#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "layerforge/graph.hpp"

namespace layerforge {

/// A permutation of the node ids of one graph.
struct VertexOrder {
    std::vector<NodeId> sequence;

    std::vector<std::size_t> positions() const;
};

/// Greedy feedback-arc-set ordering (sinks to the right end, sources to the
/// left end, otherwise the node maximizing weighted out-degree minus
/// in-degree). Ties go to the lowest node id; a shuffle seed replaces the
/// id with a seeded random rank.
VertexOrder greedy_fas_order(const Graph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Edges running from a later to an earlier position of `order`.
std::vector<EdgeId> backward_edges(const Graph& g, const VertexOrder& order);

}  // namespace layerforge
