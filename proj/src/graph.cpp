#include "layerforge/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace layerforge {

Graph::Graph(NodeId node_count) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    for (NodeId v = 0; v < node_count; ++v) add_node();
}

NodeId Graph::add_node(std::string label) {
    const auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

EdgeId Graph::add_edge(NodeId source, NodeId target, std::int64_t weight) {
    if (source < 0 || source >= node_count() || target < 0 || target >= node_count())
        throw std::out_of_range("edge endpoint is not a node");
    if (weight <= 0) throw std::invalid_argument("edge weight must be positive");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({source, target, weight});
    out_[static_cast<std::size_t>(source)].push_back(id);
    in_[static_cast<std::size_t>(target)].push_back(id);
    return id;
}

std::optional<NodeId> Graph::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<NodeId>(it - labels_.begin());
}

bool Graph::has_unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

std::int64_t Graph::total_weight() const {
    std::int64_t sum = 0;
    for (const Edge& e : edges_) sum += e.weight;
    return sum;
}

NormalizeResult normalize(const Graph& g) {
    NormalizeResult result;
    Graph& out = result.graph;
    for (NodeId v = 0; v < g.node_count(); ++v) out.add_node(g.label(v));

    std::map<std::pair<NodeId, NodeId>, std::size_t> first;  // (s,t) -> index into kept
    std::vector<Edge> kept;
    std::vector<int> counts;
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) {
            result.report.dropped_self_loops.push_back(e.source);
            continue;
        }
        auto [it, inserted] = first.emplace(std::make_pair(e.source, e.target), kept.size());
        if (inserted) {
            kept.push_back(e);
            counts.push_back(1);
        } else {
            kept[it->second].weight += e.weight;
            ++counts[it->second];
        }
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.add_edge(kept[i].source, kept[i].target, kept[i].weight);
        if (counts[i] > 1)
            result.report.merged.push_back({kept[i].source, kept[i].target, counts[i], kept[i].weight});
    }
    return result;
}

bool is_normalized(const Graph& g) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) return false;
        pairs.emplace_back(e.source, e.target);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::optional<std::vector<NodeId>> topological_order(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::size_t> indeg(static_cast<std::size_t>(n));
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < n; ++v) {
        indeg[static_cast<std::size_t>(v)] = g.in_edges(v).size();
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const NodeId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (EdgeId e : g.out_edges(v)) {
            const NodeId w = g.edge(e).target;
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
        }
    }
    if (order.size() != static_cast<std::size_t>(n)) return std::nullopt;
    return order;
}

bool is_acyclic(const Graph& g) { return topological_order(g).has_value(); }

Components weak_components(const Graph& g) {
    Components c;
    c.component_of.assign(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (c.component_of[static_cast<std::size_t>(root)] >= 0) continue;
        const int id = static_cast<int>(c.members.size());
        c.members.emplace_back();
        c.component_of[static_cast<std::size_t>(root)] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            c.members.back().push_back(v);
            auto visit = [&](EdgeId e) {
                const NodeId w = g.opposite(e, v);
                if (c.component_of[static_cast<std::size_t>(w)] < 0) {
                    c.component_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            };
            for (EdgeId e : g.out_edges(v)) visit(e);
            for (EdgeId e : g.in_edges(v)) visit(e);
        }
        std::sort(c.members.back().begin(), c.members.back().end());
    }
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes) {
    std::vector<NodeId> local(static_cast<std::size_t>(g.node_count()), kNoNode);
    Graph sub;
    for (NodeId v : nodes) local[static_cast<std::size_t>(v)] = sub.add_node(g.label(v));
    for (const Edge& e : g.edges()) {
        const NodeId s = local[static_cast<std::size_t>(e.source)];
        const NodeId t = local[static_cast<std::size_t>(e.target)];
        if (s != kNoNode && t != kNoNode) sub.add_edge(s, t, e.weight);
    }
    return sub;
}

PeelResult peel_leaves(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::size_t> degree(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<bool> removed_edge(g.edges().size(), false);
    std::deque<NodeId> queue;
    std::vector<bool> queued(static_cast<std::size_t>(n), false);

    for (NodeId v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) <= 1) {
            queue.push_back(v);
            queued[static_cast<std::size_t>(v)] = true;
        }
    }

    PeelResult result;
    result.record.original_node_count = n;
    while (!queue.empty()) {
        const NodeId leaf = queue.front();
        queue.pop_front();
        PeelStep step{leaf, kNoNode, LeafEdge::kNone};
        auto take = [&](const std::vector<EdgeId>& edges, LeafEdge dir) {
            for (EdgeId e : edges) {
                if (removed_edge[static_cast<std::size_t>(e)]) continue;
                removed_edge[static_cast<std::size_t>(e)] = true;
                step.neighbor = g.opposite(e, leaf);
                step.direction = dir;
            }
        };
        take(g.out_edges(leaf), LeafEdge::kAwayFromLeaf);
        take(g.in_edges(leaf), LeafEdge::kTowardLeaf);
        removed[static_cast<std::size_t>(leaf)] = true;
        result.record.steps.push_back(step);
        if (step.neighbor != kNoNode) {
            auto& d = degree[static_cast<std::size_t>(step.neighbor)];
            --d;
            if (d <= 1 && !queued[static_cast<std::size_t>(step.neighbor)]) {
                queue.push_back(step.neighbor);
                queued[static_cast<std::size_t>(step.neighbor)] = true;
            }
        }
    }

    for (NodeId v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) result.record.core_to_original.push_back(v);
    result.core = induced_subgraph(g, result.record.core_to_original);
    return result;
}

}  // namespace layerforge
