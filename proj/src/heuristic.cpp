#include "layerforge/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "layerforge/network_simplex.hpp"
#include "random.hpp"

namespace layerforge {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t at(NodeId v) { return static_cast<std::size_t>(v); }

// |a ∪ b| restricted by a predicate on the layer, for the small sorted-free
// neighbour lists a node has.
template <typename Pred>
std::int64_t union_count(const std::vector<NodeId>& a, const std::vector<NodeId>& b, Pred keep) {
    std::vector<NodeId> all;
    for (NodeId w : a)
        if (keep(w)) all.push_back(w);
    for (NodeId w : b)
        if (keep(w)) all.push_back(w);
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
}

}  // namespace

Layering construct_layering_from(const Graph& g, NodeId start) {
    const NodeId n = g.node_count();
    if (n == 0) return {};
    if (start < 0 || start >= n) throw std::out_of_range("start node out of range");

    const auto un = at(n);
    std::vector<std::int64_t> score(un), inc_as(un, 0), out_as(un, 0);
    for (NodeId v = 0; v < n; ++v) score[at(v)] = static_cast<std::int64_t>(g.degree(v));
    std::vector<bool> assigned(un, false), candidate(un, false);
    std::set<std::pair<std::int64_t, NodeId>> frontier;
    Layering index(un, 0);
    Layer left = -1;
    Layer right = 0;

    auto touch = [&](NodeId v, std::int64_t& counter) {
        if (assigned[at(v)]) return;
        if (candidate[at(v)]) frontier.erase({score[at(v)], v});
        // one edge moves from the unassigned to the assigned side
        score[at(v)] -= 2;
        ++counter;
        frontier.insert({score[at(v)], v});
        candidate[at(v)] = true;
    };

    NodeId c = start;
    while (c != kNoNode) {
        if (inc_as[at(c)] < out_as[at(c)])
            index[c] = left--;
        else
            index[c] = right++;
        assigned[at(c)] = true;
        if (candidate[at(c)]) frontier.erase({score[at(c)], c});
        for (EdgeId e : g.out_edges(c)) {
            const NodeId v = g.edge(e).target;
            touch(v, inc_as[at(v)]);
        }
        for (EdgeId e : g.in_edges(c)) {
            const NodeId v = g.edge(e).source;
            touch(v, out_as[at(v)]);
        }
        c = frontier.empty() ? kNoNode : frontier.begin()->second;
    }
    return index;
}

Layering construct_layering(const Graph& g, std::uint64_t seed) {
    if (g.empty()) return {};
    auto rng = detail::make_stream(seed, 0);
    return construct_layering_from(g, static_cast<NodeId>(detail::uniform_below(rng, at(g.node_count()))));
}

Neighbourhood neighbourhood(const Graph& g, const Layering& L, NodeId v) {
    Neighbourhood nb;
    for (EdgeId e : g.out_edges(v)) {
        const NodeId w = g.edge(e).target;
        if (L[w] < L[v]) nb.top_suc.push_back(w);
        else if (L[w] > L[v]) nb.bot_suc.push_back(w);
    }
    for (EdgeId e : g.in_edges(v)) {
        const NodeId w = g.edge(e).source;
        if (L[w] < L[v]) nb.top_pre.push_back(w);
        else if (L[w] > L[v]) nb.bot_pre.push_back(w);
    }
    return nb;
}

std::int64_t compute_move(const Graph& g, const Layering& L, NodeId v) {
    const Neighbourhood nb = neighbourhood(g, L, v);
    if (nb.top_suc.empty()) return 0;
    auto layer = [&](NodeId w) { return L[w]; };
    if (nb.top_pre.empty()) {
        Layer lowest = L[nb.top_suc.front()];
        for (NodeId w : nb.top_suc) lowest = std::min(lowest, layer(w));
        return static_cast<std::int64_t>(L[v]) - lowest + 1;
    }
    Layer highest = L[nb.top_pre.front()];
    for (NodeId w : nb.top_pre) highest = std::max(highest, layer(w));
    return static_cast<std::int64_t>(L[v]) - highest - 1;
}

std::int64_t compute_profit(const Graph& g, const Layering& L, NodeId v, std::int64_t m, std::int64_t x,
                            const GlpWeights& w) {
    if (m <= 1) return 0;
    if (w.rev_infinite) throw std::invalid_argument("profit needs a finite reversal weight");
    const Neighbourhood nb = neighbourhood(g, L, v);
    const std::int64_t top_adj_before = union_count(nb.top_suc, nb.top_pre, [&](NodeId u) { return L[u] < x; });
    const std::int64_t bot_adj = union_count(nb.bot_suc, nb.bot_pre, [](NodeId) { return true; });
    const std::int64_t top_suc_after =
        std::count_if(nb.top_suc.begin(), nb.top_suc.end(), [&](NodeId u) { return L[u] > x; });
    return w.len * (m * top_adj_before - m * bot_adj) + w.rev * top_suc_after;
}

Layering improve_layering(const Graph& g, const Layering& L, const GlpWeights& w, ImproveStats* stats) {
    if (!is_feasible(g, L)) throw InfeasibleLayering("improvement needs a feasible layering");
    const NodeId n = g.node_count();
    Layering cur = L;
    std::vector<std::int64_t> move(at(n), 0), profit(at(n), 0);
    std::set<std::pair<std::int64_t, NodeId>> queue;  // (-profit, node)

    auto refresh = [&](NodeId v) {
        if (profit[at(v)] > 0) queue.erase({-profit[at(v)], v});
        move[at(v)] = compute_move(g, cur, v);
        profit[at(v)] = compute_profit(g, cur, v, move[at(v)], cur[v] - move[at(v)], w);
        if (profit[at(v)] > 0) queue.insert({-profit[at(v)], v});
    };
    for (NodeId v = 0; v < n; ++v) refresh(v);

    // exact objective change of putting v on layer x; nullopt if infeasible
    auto delta_of = [&](NodeId v, Layer x) -> std::optional<std::int64_t> {
        std::int64_t delta = 0;
        auto account = [&](EdgeId e) -> bool {
            const Edge& ed = g.edge(e);
            const Layer other = ed.source == v ? cur[ed.target] : cur[ed.source];
            if (other == x) return false;
            const Layer s_old = cur[ed.source], t_old = cur[ed.target];
            const Layer s_new = ed.source == v ? x : s_old;
            const Layer t_new = ed.target == v ? x : t_old;
            auto cost = [&](Layer s, Layer t) {
                const std::int64_t d = static_cast<std::int64_t>(t) - s;
                return ed.weight * (w.len * (d < 0 ? -d : d) + (d < 0 ? w.rev : 0));
            };
            delta += cost(s_new, t_new) - cost(s_old, t_old);
            return true;
        };
        for (EdgeId e : g.out_edges(v))
            if (!account(e)) return std::nullopt;
        for (EdgeId e : g.in_edges(v))
            if (!account(e)) return std::nullopt;
        return delta;
    };

    ImproveStats local;
    ImproveStats& st = stats ? *stats : local;
    const long cap = static_cast<long>(n) * static_cast<long>(n);
    while (!queue.empty() && st.applied < cap) {
        const NodeId v = queue.begin()->second;
        queue.erase(queue.begin());
        profit[at(v)] = 0;

        const std::int64_t m = compute_move(g, cur, v);
        const std::int64_t p = compute_profit(g, cur, v, m, cur[v] - m, w);
        const auto x = static_cast<Layer>(cur[v] - m);
        const auto delta = p > 0 ? delta_of(v, x) : std::nullopt;
        if (!delta || *delta >= 0) {
            ++st.rejected;
            continue;
        }
        cur[v] = x;
        ++st.applied;
        std::vector<NodeId> touched;
        for (EdgeId e : g.out_edges(v)) touched.push_back(g.edge(e).target);
        for (EdgeId e : g.in_edges(v)) touched.push_back(g.edge(e).source);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (NodeId u : touched) refresh(u);
    }
    return cur;
}

HeuristicResult solve_glp_heuristic(const Graph& input, const HeuristicOptions& options, const GlpWeights& report) {
    const auto started = Clock::now();
    const Graph g = is_normalized(input) ? input : normalize(input).graph;
    HeuristicResult result;

    const PeelResult peeled = peel_leaves(g);
    const Graph& core = peeled.core;

    auto t = Clock::now();
    Layering arrangement(at(core.node_count()), 0);
    const Components comps = weak_components(core);
    for (std::size_t c = 0; c < comps.count(); ++c) {
        const auto& members = comps.members[c];
        const Graph sub = induced_subgraph(core, members);
        auto rng = detail::make_stream(options.seed, c);
        const auto start = static_cast<NodeId>(detail::uniform_below(rng, members.size()));
        const Layering part = construct_layering_from(sub, start);
        for (std::size_t i = 0; i < members.size(); ++i) arrangement[members[i]] = part[static_cast<NodeId>(i)];
    }
    result.timings.construction_ms = ms_since(t);

    Layering core_layering = min_length_layering(deduce_acyclic(core, arrangement).graph);
    if (!options.skip_improvement) {
        t = Clock::now();
        core_layering = improve_layering(core, core_layering, kImprovementWeights, &result.improve);
        result.timings.improvement_ms = ms_since(t);
    }

    const Layering full = reattach_leaves(core_layering, peeled.record);
    const Layering final_layering = min_length_layering(deduce_acyclic(g, full).graph).canonical();
    result.solution = objective(g, final_layering, report);
    result.timings.total_ms = ms_since(started);
    return result;
}

}  // namespace layerforge
