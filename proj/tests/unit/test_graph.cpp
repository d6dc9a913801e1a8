#include <doctest.h>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"
#include "oracles.hpp"

using namespace layerforge;
using oracle::make_graph;

TEST_SUITE("graph") {

TEST_CASE("normalize drops self-loops and reports them") {
    const Graph g = make_graph({{"a", "a"}, {"a", "b"}});
    const auto r = normalize(g);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.graph.edge(0) == Edge{0, 1, 1});
    REQUIRE(r.report.dropped_self_loops.size() == 1);
    CHECK(r.report.dropped_self_loops[0] == 0);
}

TEST_CASE("normalize merges parallel edges by summing weights") {
    const Graph g = make_graph({{"a", "b"}, {"a", "b"}});
    const auto r = normalize(g);
    REQUIRE(r.graph.edge_count() == 1);
    CHECK(r.graph.edge(0).weight == 2);
    REQUIRE(r.report.merged.size() == 1);
    CHECK(r.report.merged[0].merged_count == 2);
    CHECK(r.report.merged[0].total_weight == 2);
}

TEST_CASE("normalize leaves a simple graph alone and is idempotent") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const auto r = normalize(g);
    CHECK(r.graph == g);
    CHECK(r.report.empty());
    CHECK(is_normalized(g));
    const Graph messy = make_graph({{"a", "a"}, {"a", "b"}, {"a", "b"}, {"b", "a"}});
    const Graph once = normalize(messy).graph;
    CHECK(normalize(once).graph == once);
    CHECK(normalize(once).report.empty());
}

TEST_CASE("opposite edges are not parallel") {
    const Graph g = make_graph({{"a", "b"}, {"b", "a"}});
    CHECK(is_normalized(g));
    CHECK(normalize(g).graph.edge_count() == 2);
}

TEST_CASE("add_edge rejects bad endpoints and weights") {
    Graph g(2);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(0, 1, 0), std::invalid_argument);
    CHECK(g.label(1) == "1");
}

TEST_CASE("topological order and acyclicity") {
    const Graph dag = make_graph({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    const auto order = topological_order(dag);
    REQUIRE(order);
    CHECK(*order == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(is_acyclic(dag));
    CHECK_FALSE(is_acyclic(make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}})));
}

TEST_CASE("weak components are numbered by lowest member") {
    const Graph g = make_graph(5, {{3, 4}, {1, 0}});
    const auto c = weak_components(g);
    REQUIRE(c.count() == 3);
    CHECK(c.members[0] == std::vector<NodeId>{0, 1});
    CHECK(c.members[1] == std::vector<NodeId>{2});
    CHECK(c.members[2] == std::vector<NodeId>{3, 4});
}

TEST_CASE("peeling a path removes every node") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const auto p = peel_leaves(g);
    CHECK(p.core.node_count() == 0);
    CHECK(p.record.steps.size() == 3);
}

TEST_CASE("peeling a triangle removes nothing") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto p = peel_leaves(g);
    CHECK(p.core == g);
    CHECK(p.record.steps.empty());
}

TEST_CASE("peeling a triangle with a pendant removes the pendant") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
    const auto p = peel_leaves(g);
    CHECK(p.core.node_count() == 3);
    CHECK(p.core.edge_count() == 3);
    REQUIRE(p.record.steps.size() == 1);
    CHECK(p.record.steps[0] == PeelStep{3, 2, LeafEdge::kTowardLeaf});
    CHECK(p.record.core_to_original == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("peeling keeps core plus record equal to the node count") {
    const Graph g = make_graph(9, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {5, 4}, {6, 7}, {7, 6}});
    const auto p = peel_leaves(g);
    CHECK(p.core.node_count() + static_cast<NodeId>(p.record.steps.size()) == g.node_count());
}

TEST_CASE("reattach places leaves one layer from their neighbour, edges forward") {
    SUBCASE("edge leaf -> neighbour") {
        PeelRecord r;
        r.original_node_count = 2;
        r.steps = {{0, 1, LeafEdge::kAwayFromLeaf}};
        r.core_to_original = {1};
        const Layering L = reattach_leaves(Layering(std::vector<Layer>{1}), r);
        CHECK(L[0] == 0);
        CHECK(L[1] == 1);
    }
    SUBCASE("edge neighbour -> leaf") {
        PeelRecord r;
        r.original_node_count = 2;
        r.steps = {{1, 0, LeafEdge::kTowardLeaf}};
        r.core_to_original = {0};
        const Layering L = reattach_leaves(Layering(std::vector<Layer>{1}), r);
        CHECK(L[1] == 2);
    }
    SUBCASE("whole path replays from the last node") {
        const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
        const auto p = peel_leaves(g);
        const Layering L = reattach_leaves(Layering(), p.record);
        CHECK(L[1] - L[0] == 1);
        CHECK(L[2] - L[1] == 1);
    }
}

TEST_CASE("reattached edges have length one and point forward") {
    const Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {4, 3}, {3, 5}, {6, 0}, {7, 6}});
    const auto p = peel_leaves(g);
    Layering core(static_cast<std::size_t>(p.core.node_count()), 0);
    for (NodeId v = 0; v < p.core.node_count(); ++v) core[v] = v + 1;
    const Layering L = reattach_leaves(core, p.record);
    CHECK(is_feasible(g, L));
    for (const PeelStep& s : p.record.steps) {
        if (s.direction == LeafEdge::kNone) continue;
        const NodeId from = s.direction == LeafEdge::kTowardLeaf ? s.neighbor : s.leaf;
        const NodeId to = s.direction == LeafEdge::kTowardLeaf ? s.leaf : s.neighbor;
        CHECK(L[to] - L[from] == 1);
    }
}

TEST_CASE("induced subgraph keeps internal edges only") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
    const Graph s = induced_subgraph(g, {2, 3});
    CHECK(s.node_count() == 2);
    CHECK(s.edge_count() == 1);
    CHECK(s.label(0) == "c");
}

}
