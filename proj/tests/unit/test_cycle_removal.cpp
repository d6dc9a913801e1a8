#include <doctest.h>

#include "layerforge/corpus.hpp"
#include "layerforge/cycle_removal.hpp"
#include "oracles.hpp"

using namespace layerforge;
using oracle::make_graph;

namespace {

Graph reverse_edges(const Graph& g, const std::vector<EdgeId>& back) {
    Graph out;
    for (NodeId v = 0; v < g.node_count(); ++v) out.add_node(g.label(v));
    std::vector<bool> flip(static_cast<std::size_t>(g.edge_count()), false);
    for (EdgeId e : back) flip[static_cast<std::size_t>(e)] = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (flip[static_cast<std::size_t>(e)])
            out.add_edge(ed.target, ed.source, ed.weight);
        else
            out.add_edge(ed.source, ed.target, ed.weight);
    }
    return out;
}

}  // namespace

TEST_SUITE("cycle_removal") {

TEST_CASE("a DAG keeps its topological order") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const auto order = greedy_fas_order(g);
    CHECK(order.sequence == std::vector<NodeId>{0, 1, 2});
    CHECK(backward_edges(g, order).empty());
}

TEST_CASE("a triangle breaks at its last edge") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto order = greedy_fas_order(g);
    CHECK(order.sequence == std::vector<NodeId>{0, 1, 2});
    CHECK(backward_edges(g, order) == std::vector<EdgeId>{2});
}

TEST_CASE("a two-cycle breaks at b -> a") {
    const Graph g = make_graph({{"a", "b"}, {"b", "a"}});
    const auto order = greedy_fas_order(g);
    CHECK(order.sequence == std::vector<NodeId>{0, 1});
    CHECK(backward_edges(g, order) == std::vector<EdgeId>{1});
}

TEST_CASE("backward edges of a reversed order") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(backward_edges(g, VertexOrder{{2, 1, 0}}) == std::vector<EdgeId>{0, 1});
}

TEST_CASE("positions invert the sequence") {
    const VertexOrder o{{2, 0, 1}};
    CHECK(o.positions() == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("reversing backward edges of any order yields a DAG") {
    GeneratorConfig c;
    c.min_nodes = 5;
    c.max_nodes = 30;
    c.count = 150;
    c.seed = 11;
    int index = 0;
    for (const Graph& g : generate(c)) {
        const auto greedy = greedy_fas_order(g);
        CHECK(oracle::acyclic(reverse_edges(g, backward_edges(g, greedy))));
        const auto shuffled = greedy_fas_order(g, static_cast<std::uint64_t>(index));
        CHECK(oracle::acyclic(reverse_edges(g, backward_edges(g, shuffled))));
        VertexOrder reversed = greedy;
        std::reverse(reversed.sequence.begin(), reversed.sequence.end());
        CHECK(oracle::acyclic(reverse_edges(g, backward_edges(g, reversed))));
        CHECK(backward_edges(g, greedy).size() * 2 <= static_cast<std::size_t>(g.edge_count()));
        ++index;
    }
}

TEST_CASE("acyclic inputs give no backward edges") {
    GeneratorConfig c;
    c.min_nodes = 5;
    c.max_nodes = 40;
    c.count = 100;
    c.seed = 12;
    c.acyclic = true;
    for (const Graph& g : generate(c)) CHECK(backward_edges(g, greedy_fas_order(g)).empty());
}

TEST_CASE("the order is a permutation and deterministic") {
    GeneratorConfig c;
    c.count = 20;
    c.seed = 13;
    for (const Graph& g : generate(c)) {
        const auto a = greedy_fas_order(g);
        CHECK(a.sequence == greedy_fas_order(g).sequence);
        std::vector<NodeId> sorted = a.sequence;
        std::sort(sorted.begin(), sorted.end());
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(sorted[static_cast<std::size_t>(v)] == v);
        CHECK(greedy_fas_order(g, 5).sequence == greedy_fas_order(g, 5).sequence);
    }
}

}
