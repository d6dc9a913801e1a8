#include "layerforge/cycle_removal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "random.hpp"

namespace layerforge {

std::vector<std::size_t> VertexOrder::positions() const {
    std::vector<std::size_t> pos(sequence.size());
    for (std::size_t i = 0; i < sequence.size(); ++i) pos.at(static_cast<std::size_t>(sequence[i])) = i;
    return pos;
}

VertexOrder greedy_fas_order(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
    const NodeId n = g.node_count();
    const auto un = static_cast<std::size_t>(n);

    std::vector<NodeId> rank(un);
    std::iota(rank.begin(), rank.end(), 0);
    if (shuffle_seed) {
        auto rng = detail::make_stream(*shuffle_seed, 0);
        for (std::size_t i = un; i > 1; --i)
            std::swap(rank[i - 1], rank[detail::uniform_below(rng, i)]);
    }
    std::vector<NodeId> by_rank(un);
    for (NodeId v = 0; v < n; ++v) by_rank[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;

    std::vector<std::int64_t> out_w(un, 0), in_w(un, 0);
    for (const Edge& e : g.edges()) {
        out_w[static_cast<std::size_t>(e.source)] += e.weight;
        in_w[static_cast<std::size_t>(e.target)] += e.weight;
    }

    enum class Bucket : std::uint8_t { kSink, kSource, kOther, kGone };
    std::vector<Bucket> bucket(un, Bucket::kGone);
    std::set<NodeId> sinks, sources;                    // keyed by rank
    std::set<std::tuple<std::int64_t, NodeId>> others;  // (-(out - in), rank)

    auto erase = [&](NodeId v) {
        const auto i = static_cast<std::size_t>(v);
        switch (bucket[i]) {
            case Bucket::kSink: sinks.erase(rank[i]); break;
            case Bucket::kSource: sources.erase(rank[i]); break;
            case Bucket::kOther: others.erase({in_w[i] - out_w[i], rank[i]}); break;
            case Bucket::kGone: break;
        }
        bucket[i] = Bucket::kGone;
    };
    auto insert = [&](NodeId v) {
        const auto i = static_cast<std::size_t>(v);
        if (out_w[i] == 0) {
            bucket[i] = Bucket::kSink;
            sinks.insert(rank[i]);
        } else if (in_w[i] == 0) {
            bucket[i] = Bucket::kSource;
            sources.insert(rank[i]);
        } else {
            bucket[i] = Bucket::kOther;
            others.insert({in_w[i] - out_w[i], rank[i]});
        }
    };
    for (NodeId v = 0; v < n; ++v) insert(v);

    std::vector<bool> removed(un, false);
    auto remove = [&](NodeId v) {
        erase(v);
        removed[static_cast<std::size_t>(v)] = true;
        for (EdgeId e : g.out_edges(v)) {
            const NodeId w = g.edge(e).target;
            if (removed[static_cast<std::size_t>(w)]) continue;
            erase(w);
            in_w[static_cast<std::size_t>(w)] -= g.edge(e).weight;
            insert(w);
        }
        for (EdgeId e : g.in_edges(v)) {
            const NodeId w = g.edge(e).source;
            if (removed[static_cast<std::size_t>(w)]) continue;
            erase(w);
            out_w[static_cast<std::size_t>(w)] -= g.edge(e).weight;
            insert(w);
        }
    };

    std::vector<NodeId> left, right;  // right is built back to front
    std::size_t remaining = un;
    while (remaining > 0) {
        while (!sinks.empty()) {
            const NodeId v = by_rank[static_cast<std::size_t>(*sinks.begin())];
            remove(v);
            right.push_back(v);
            --remaining;
        }
        while (!sources.empty()) {
            const NodeId v = by_rank[static_cast<std::size_t>(*sources.begin())];
            remove(v);
            left.push_back(v);
            --remaining;
        }
        if (!sinks.empty()) continue;
        if (!others.empty()) {
            const NodeId v = by_rank[static_cast<std::size_t>(std::get<1>(*others.begin()))];
            remove(v);
            left.push_back(v);
            --remaining;
        }
    }
    VertexOrder order;
    order.sequence = std::move(left);
    order.sequence.insert(order.sequence.end(), right.rbegin(), right.rend());
    return order;
}

std::vector<EdgeId> backward_edges(const Graph& g, const VertexOrder& order) {
    if (order.sequence.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("order does not cover the graph");
    const auto pos = order.positions();
    std::vector<EdgeId> back;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (pos[static_cast<std::size_t>(ed.source)] > pos[static_cast<std::size_t>(ed.target)]) back.push_back(e);
    }
    return back;
}

}  // namespace layerforge
