#include <doctest.h>

#include "layerforge/corpus.hpp"
#include "layerforge/network_simplex.hpp"
#include "oracles.hpp"

using namespace layerforge;
using oracle::make_graph;

namespace {

std::vector<Layer> values(const Layering& L) { return {L.values().begin(), L.values().end()}; }

}  // namespace

TEST_SUITE("network_simplex") {

TEST_CASE("path") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const Layering L = min_length_layering(g);
    CHECK(values(L) == std::vector<Layer>{1, 2, 3});
    CHECK(total_edge_length(g, L) == 2);
}

TEST_CASE("diamond") {
    const Graph g = make_graph({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    const Layering L = min_length_layering(g);
    CHECK(values(L) == std::vector<Layer>{1, 2, 2, 3});
    CHECK(total_edge_length(g, L) == 4);
    CHECK(oracle::dlp_brute_force(g) == 4);
}

TEST_CASE("long edge") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const Layering L = min_length_layering(g);
    CHECK(values(L) == std::vector<Layer>{1, 2, 3});
    CHECK(total_edge_length(g, L) == 4);
}

TEST_CASE("simplex pulls a source down to its successor") {
    // longest path puts d on layer 1 although its only edge ends on layer 4
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "e"}, {"d", "e"}});
    const Layering init = longest_path_init(g);
    CHECK(init[4] == 1);
    const Layering L = min_length_layering(g);
    CHECK(L[3] - L[4] == 1);
    CHECK(total_edge_length(g, L) == 4);
}

TEST_CASE("weights steer the optimum") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 2, 5);
    const Layering L = min_length_layering(g);
    CHECK(L[2] - L[3] == 1);
    CHECK(total_edge_length(g, L) == oracle::dlp_brute_force(g));
}

TEST_CASE("longest path initializer") {
    CHECK(values(longest_path_init(make_graph({{"a", "b"}, {"b", "c"}}))) == std::vector<Layer>{1, 2, 3});
    CHECK(values(longest_path_init(make_graph({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}))) ==
          std::vector<Layer>{1, 2, 2, 3});
    CHECK(values(longest_path_init(make_graph({{"a", "b"}, {"a", "c"}}))) == std::vector<Layer>{1, 2, 2});
}

TEST_CASE("components start at layer 1 independently") {
    const Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    const Layering L = min_length_layering(g);
    CHECK(values(L) == std::vector<Layer>{1, 2, 3, 1, 2});
}

TEST_CASE("cyclic input is rejected") {
    const Graph g = make_graph({{"a", "b"}, {"b", "a"}});
    CHECK_THROWS_AS(min_length_layering(g), CyclicGraphError);
    CHECK_THROWS_AS(longest_path_init(g), CyclicGraphError);
}

TEST_CASE("empty graph") { CHECK(min_length_layering(Graph()).empty()); }

TEST_CASE("matches brute force on small DAGs and never beats longest path the wrong way") {
    GeneratorConfig c;
    c.min_nodes = 2;
    c.max_nodes = 7;
    c.count = 150;
    c.seed = 21;
    c.acyclic = true;
    c.edge_factor = 1.6;
    for (const Graph& g : generate(c)) {
        SimplexStats stats;
        const Layering L = min_length_layering(g, &stats);
        CHECK(is_valid(g, L));
        CHECK_FALSE(stats.hit_pivot_cap);
        CHECK(total_edge_length(g, L) == oracle::dlp_brute_force(g));
        CHECK(total_edge_length(g, L) <= total_edge_length(g, longest_path_init(g)));
    }
}

TEST_CASE("larger DAGs stay valid and 1-based") {
    GeneratorConfig c;
    c.min_nodes = 50;
    c.max_nodes = 300;
    c.count = 20;
    c.seed = 22;
    c.acyclic = true;
    for (const Graph& g : generate(c)) {
        const Layering L = min_length_layering(g);
        CHECK(is_valid(g, L));
        CHECK(L.min_layer() == 1);
        CHECK(total_edge_length(g, L) <= total_edge_length(g, longest_path_init(g)));
    }
}

}
