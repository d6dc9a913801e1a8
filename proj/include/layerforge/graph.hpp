#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace layerforge {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

struct Edge {
    NodeId source = kNoNode;
    NodeId target = kNoNode;
    std::int64_t weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed graph over dense node ids 0..n-1. Each node carries a label
/// (defaults to its decimal id) used for file and report output.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId node_count);

    NodeId add_node(std::string label = {});
    /// Appends an edge; endpoints must exist and weight must be positive.
    EdgeId add_edge(NodeId source, NodeId target, std::int64_t weight = 1);

    NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    bool empty() const { return labels_.empty(); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& label(NodeId v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeId> find(const std::string& label) const;

    /// Edge ids leaving / entering v, in insertion order.
    const std::vector<EdgeId>& out_edges(NodeId v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<EdgeId>& in_edges(NodeId v) const { return in_[static_cast<std::size_t>(v)]; }
    std::size_t degree(NodeId v) const { return out_edges(v).size() + in_edges(v).size(); }

    /// Endpoint of e that is not v.
    NodeId opposite(EdgeId e, NodeId v) const {
        const Edge& ed = edge(e);
        return ed.source == v ? ed.target : ed.source;
    }

    bool has_unit_weights() const;
    std::int64_t total_weight() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

struct MergedEdge {
    NodeId source;
    NodeId target;
    int merged_count;          // number of input edges folded together
    std::int64_t total_weight;
};

struct NormalizeReport {
    std::vector<NodeId> dropped_self_loops;
    std::vector<MergedEdge> merged;

    bool empty() const { return dropped_self_loops.empty() && merged.empty(); }
};

struct NormalizeResult {
    Graph graph;
    NormalizeReport report;
};

/// Drops self-loops and folds parallel edges (same source and target) into
/// the first occurrence, summing weights. Node set and labels are kept.
NormalizeResult normalize(const Graph& g);

bool is_normalized(const Graph& g);

/// Topological order, or nullopt if g contains a directed cycle.
/// Among ready nodes the lowest id is emitted first.
std::optional<std::vector<NodeId>> topological_order(const Graph& g);
bool is_acyclic(const Graph& g);

/// Weakly connected components; component ids are numbered by lowest member.
struct Components {
    std::vector<int> component_of;
    std::vector<std::vector<NodeId>> members;  // sorted ascending

    std::size_t count() const { return members.size(); }
};
Components weak_components(const Graph& g);

/// Subgraph induced by `nodes` (in the given order); result node i is nodes[i].
Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes);

// --- leaf peeling ---------------------------------------------------------

enum class LeafEdge : std::uint8_t {
    kNone,           // node was isolated when removed
    kTowardLeaf,     // neighbor -> leaf
    kAwayFromLeaf,   // leaf -> neighbor
};

struct PeelStep {
    NodeId leaf;       // id in the original graph
    NodeId neighbor;   // id in the original graph, kNoNode for kNone
    LeafEdge direction;

    friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

struct PeelRecord {
    NodeId original_node_count = 0;
    std::vector<PeelStep> steps;            // removal order
    std::vector<NodeId> core_to_original;   // core node i is original node core_to_original[i]
};

struct PeelResult {
    Graph core;
    PeelRecord record;
};

/// Iteratively removes nodes with at most one incident edge until none remain.
PeelResult peel_leaves(const Graph& g);

}  // namespace layerforge
