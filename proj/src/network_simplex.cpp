#include "layerforge/network_simplex.hpp"

#include <algorithm>
#include <iostream>
#include <limits>

namespace layerforge {

namespace {

constexpr std::int64_t kNoSlack = std::numeric_limits<std::int64_t>::max();

// Network simplex over one weakly connected acyclic graph. Ranks are signed;
// every tree edge is tight (length exactly 1).
class Simplex {
public:
    explicit Simplex(const Graph& g)
        : g_(g),
          n_(static_cast<std::size_t>(g.node_count())),
          rank_(n_, 0),
          in_tree_(g.edges().size(), false),
          tree_adj_(n_),
          parent_edge_(n_, -1),
          low_(n_, 0),
          lim_(n_, 0),
          cut_(g.edges().size(), 0),
          balance_(n_, 0) {
        for (const Edge& e : g_.edges()) {
            balance_[static_cast<std::size_t>(e.source)] += e.weight;
            balance_[static_cast<std::size_t>(e.target)] -= e.weight;
        }
    }

    Layering run(SimplexStats& stats) {
        const Layering initial = longest_path_init(g_);
        for (std::size_t v = 0; v < n_; ++v) rank_[v] = initial[static_cast<NodeId>(v)];
        if (n_ <= 1) return initial;

        feasible_tree();
        const long cap = std::max<long>(1, static_cast<long>(n_) * static_cast<long>(g_.edges().size()));
        long pivots = 0;
        for (;;) {
            rebuild_tree();
            const EdgeId leave = leave_edge();
            if (leave < 0) break;
            if (pivots >= cap) {
                stats.hit_pivot_cap = true;
                break;
            }
            const EdgeId enter = enter_edge(leave);
            in_tree_[static_cast<std::size_t>(leave)] = false;
            in_tree_[static_cast<std::size_t>(enter)] = true;
            ++pivots;
        }
        stats.pivots += pivots;

        std::vector<Layer> out(n_);
        for (std::size_t v = 0; v < n_; ++v) out[v] = static_cast<Layer>(rank_[v]);
        Layering result(std::move(out));
        if (stats.hit_pivot_cap) {
            std::cerr << "layerforge: network simplex pivot cap reached after " << pivots << " pivots\n";
            if (total_edge_length(g_, initial) < total_edge_length(g_, result)) result = initial;
        }
        return result.shifted(1 - result.min_layer());
    }

private:
    std::int64_t slack(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return rank_[static_cast<std::size_t>(ed.target)] - rank_[static_cast<std::size_t>(ed.source)] - 1;
    }

    // Grows a tight spanning tree from node 0, shifting the partial tree
    // toward the closest outside node whenever no tight edge leaves it.
    void feasible_tree() {
        std::vector<bool> in(n_, false);
        std::vector<NodeId> members{0};
        in[0] = true;
        for (;;) {
            for (std::size_t head = 0; head < members.size(); ++head) {
                const NodeId v = members[head];
                auto grow = [&](EdgeId e) {
                    const NodeId w = g_.opposite(e, v);
                    if (in[static_cast<std::size_t>(w)] || slack(e) != 0) return;
                    in[static_cast<std::size_t>(w)] = true;
                    in_tree_[static_cast<std::size_t>(e)] = true;
                    members.push_back(w);
                };
                for (EdgeId e : g_.out_edges(v)) grow(e);
                for (EdgeId e : g_.in_edges(v)) grow(e);
            }
            if (members.size() == n_) return;

            EdgeId best = -1;
            std::int64_t best_slack = kNoSlack;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                const Edge& ed = g_.edge(e);
                if (in[static_cast<std::size_t>(ed.source)] == in[static_cast<std::size_t>(ed.target)]) continue;
                if (slack(e) < best_slack) {
                    best_slack = slack(e);
                    best = e;
                }
            }
            const std::int64_t delta =
                in[static_cast<std::size_t>(g_.edge(best).target)] ? -best_slack : best_slack;
            for (NodeId v : members) rank_[static_cast<std::size_t>(v)] += delta;
        }
    }

    // Re-derives ranks from the tree (all tree edges tight), the low/lim
    // postorder numbering and every tree edge's cut value.
    void rebuild_tree() {
        for (auto& adj : tree_adj_) adj.clear();
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (!in_tree_[static_cast<std::size_t>(e)]) continue;
            tree_adj_[static_cast<std::size_t>(g_.edge(e).source)].push_back(e);
            tree_adj_[static_cast<std::size_t>(g_.edge(e).target)].push_back(e);
        }

        std::vector<std::int64_t> subtree(balance_);
        std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
        parent_edge_[0] = -1;
        const std::int64_t root_rank = rank_[0];
        int counter = 0;
        low_[0] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& adj = tree_adj_[static_cast<std::size_t>(v)];
            if (next < adj.size()) {
                const EdgeId e = adj[next++];
                if (e == parent_edge_[static_cast<std::size_t>(v)]) continue;
                const NodeId w = g_.opposite(e, v);
                parent_edge_[static_cast<std::size_t>(w)] = e;
                rank_[static_cast<std::size_t>(w)] =
                    rank_[static_cast<std::size_t>(v)] + (g_.edge(e).source == v ? 1 : -1);
                low_[static_cast<std::size_t>(w)] = counter + 1;
                stack.push_back({w, 0});
                continue;
            }
            const NodeId done = v;
            stack.pop_back();
            lim_[static_cast<std::size_t>(done)] = ++counter;
            const EdgeId pe = parent_edge_[static_cast<std::size_t>(done)];
            if (pe >= 0) {
                const std::int64_t s = subtree[static_cast<std::size_t>(done)];
                cut_[static_cast<std::size_t>(pe)] = g_.edge(pe).source == done ? s : -s;
                subtree[static_cast<std::size_t>(g_.opposite(pe, done))] += s;
            }
        }
        rank_[0] = root_rank;
    }

    EdgeId leave_edge() const {
        EdgeId best = -1;
        std::int64_t best_cut = 0;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (!in_tree_[static_cast<std::size_t>(e)]) continue;
            if (cut_[static_cast<std::size_t>(e)] < best_cut) {
                best_cut = cut_[static_cast<std::size_t>(e)];
                best = e;
            }
        }
        return best;
    }

    bool in_subtree(NodeId root, NodeId v) const {
        const auto r = static_cast<std::size_t>(root);
        const int l = lim_[static_cast<std::size_t>(v)];
        return low_[r] <= l && l <= lim_[r];
    }

    // Non-tree edge of minimum slack crossing from the head component of
    // `leave` back to its tail component.
    EdgeId enter_edge(EdgeId leave) const {
        const Edge& le = g_.edge(leave);
        const bool source_is_child = parent_edge_[static_cast<std::size_t>(le.source)] == leave;
        const NodeId child = source_is_child ? le.source : le.target;
        EdgeId best = -1;
        std::int64_t best_slack = kNoSlack;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (in_tree_[static_cast<std::size_t>(e)]) continue;
            const Edge& ed = g_.edge(e);
            const bool s_in = in_subtree(child, ed.source);
            const bool t_in = in_subtree(child, ed.target);
            // tail component is the subtree iff the leaving edge's source is the child
            const bool crosses = source_is_child ? (!s_in && t_in) : (s_in && !t_in);
            if (crosses && slack(e) < best_slack) {
                best_slack = slack(e);
                best = e;
            }
        }
        return best;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::int64_t> rank_;
    std::vector<bool> in_tree_;
    std::vector<std::vector<EdgeId>> tree_adj_;
    std::vector<EdgeId> parent_edge_;
    std::vector<int> low_;
    std::vector<int> lim_;
    std::vector<std::int64_t> cut_;
    std::vector<std::int64_t> balance_;
};

}  // namespace

Layering longest_path_init(const Graph& g) {
    auto order = topological_order(g);
    if (!order) throw CyclicGraphError("graph has a directed cycle");
    Layering L(static_cast<std::size_t>(g.node_count()), 1);
    for (NodeId v : *order)
        for (EdgeId e : g.out_edges(v)) {
            const NodeId w = g.edge(e).target;
            L[w] = std::max(L[w], L[v] + 1);
        }
    return L;
}

Layering min_length_layering(const Graph& g, SimplexStats* stats) {
    if (!is_acyclic(g)) throw CyclicGraphError("graph has a directed cycle");
    SimplexStats local;
    SimplexStats& st = stats ? *stats : local;
    const Components comps = weak_components(g);
    if (comps.count() == 1) return Simplex(g).run(st);

    Layering result(static_cast<std::size_t>(g.node_count()), 1);
    for (const auto& members : comps.members) {
        if (members.size() == 1) continue;
        const Graph sub = induced_subgraph(g, members);
        const Layering part = Simplex(sub).run(st);
        for (std::size_t i = 0; i < members.size(); ++i) result[members[i]] = part[static_cast<NodeId>(i)];
    }
    return result;
}

std::int64_t total_edge_length(const Graph& g, const Layering& L) {
    std::int64_t sum = 0;
    for (const Edge& e : g.edges()) sum += e.weight * (static_cast<std::int64_t>(L[e.target]) - L[e.source]);
    return sum;
}

}  // namespace layerforge
