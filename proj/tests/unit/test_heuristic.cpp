#include <doctest.h>

#include "layerforge/corpus.hpp"
#include "layerforge/heuristic.hpp"
#include "layerforge/network_simplex.hpp"
#include "oracles.hpp"

using namespace layerforge;
using oracle::make_graph;

namespace {

std::vector<Layer> values(const Layering& L) { return {L.values().begin(), L.values().end()}; }

std::int64_t cost15(const Graph& g, const Layering& L) {
    const auto s = oracle::score(g, L);
    return s.length + 5 * s.reversed;
}

// Graph over named nodes with explicit layers.
struct Placed {
    Graph g;
    Layering L;
};

Placed placed(std::initializer_list<std::pair<const char*, Layer>> nodes,
              std::initializer_list<std::pair<const char*, const char*>> edges) {
    Placed p;
    std::vector<Layer> layers;
    for (const auto& [name, layer] : nodes) {
        p.g.add_node(name);
        layers.push_back(layer);
    }
    for (const auto& [u, v] : edges) p.g.add_edge(*p.g.find(u), *p.g.find(v));
    p.L = Layering(layers);
    return p;
}

}  // namespace

TEST_SUITE("heuristic") {

TEST_CASE("construction of a single node") {
    Graph g(1);
    CHECK(values(construct_layering_from(g, 0)) == std::vector<Layer>{0});
    CHECK(construct_layering(Graph(), 3).empty());
}

TEST_CASE("construction of a two-cycle from a") {
    const Graph g = make_graph({{"a", "b"}, {"b", "a"}});
    const Layering L = construct_layering_from(g, 0);
    CHECK(values(L) == std::vector<Layer>{0, 1});
    CHECK(oracle::score(g, L).reversed == 1);
}

TEST_CASE("construction of a triangle from a") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const Layering L = construct_layering_from(g, 0);
    CHECK(values(L) == std::vector<Layer>{0, 1, 2});
    CHECK(oracle::score(g, L).reversed == 1);
}

TEST_CASE("construction places a node left when more assigned edges leave it") {
    // start at a; b has edge b -> a only, so outAs > incAs and b goes left
    const Graph g = make_graph({{"b", "a"}, {"a", "c"}, {"c", "b"}});
    const Layering L = construct_layering_from(g, *g.find("a"));
    CHECK(L[*g.find("a")] == 0);
    CHECK(L[*g.find("b")] == -1);
}

TEST_CASE("construction yields distinct indices") {
    GeneratorConfig c;
    c.count = 40;
    c.seed = 31;
    for (const Graph& g : generate(c)) {
        const auto comps = weak_components(g);
        const Graph sub = induced_subgraph(g, comps.members[0]);
        const Layering L = construct_layering(sub, 7);
        std::vector<Layer> v = values(L);
        std::sort(v.begin(), v.end());
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        CHECK(v.back() - v.front() + 1 == static_cast<Layer>(v.size()));
    }
}

TEST_CASE("move is zero without upward successors") {
    const auto p = placed({{"v", 2}, {"w", 3}}, {{"v", "w"}});
    CHECK(compute_move(p.g, p.L, 0) == 0);
}

TEST_CASE("move lifts above the highest successor when no predecessor is above") {
    const auto p = placed({{"a", 1}, {"b", 2}}, {{"b", "a"}});
    CHECK(compute_move(p.g, p.L, *p.g.find("b")) == 2);
}

TEST_CASE("move stops below the lowest upper predecessor") {
    const auto p = placed({{"v", 5}, {"s", 3}, {"p", 2}}, {{"v", "s"}, {"p", "v"}});
    CHECK(compute_move(p.g, p.L, 0) == 2);
}

TEST_CASE("profit is zero for short moves") {
    const auto p = placed({{"v", 5}, {"s", 3}}, {{"v", "s"}});
    CHECK(compute_profit(p.g, p.L, 0, 1, 4) == 0);
    CHECK(compute_profit(p.g, p.L, 0, 0, 5) == 0);
}

TEST_CASE("profit rewards flipped successors") {
    // x = 3; p above x, s between x and v
    const auto p = placed({{"v", 5}, {"s", 4}, {"p", 1}}, {{"v", "s"}, {"p", "v"}});
    CHECK(compute_profit(p.g, p.L, 0, 2, 3, GlpWeights::finite(1, 5)) == 7);
}

TEST_CASE("profit penalizes lower neighbours") {
    const auto p = placed({{"v", 5}, {"b1", 6}, {"b2", 7}}, {{"v", "b1"}, {"b2", "v"}});
    CHECK(compute_profit(p.g, p.L, 0, 2, 3, GlpWeights::finite(1, 5)) == -4);
}

TEST_CASE("neighbourhood splits by layer and direction") {
    const auto p = placed({{"v", 3}, {"a", 1}, {"b", 5}, {"c", 2}, {"d", 4}},
                          {{"v", "a"}, {"v", "b"}, {"c", "v"}, {"d", "v"}});
    const auto n = neighbourhood(p.g, p.L, 0);
    CHECK(n.top_suc == std::vector<NodeId>{1});
    CHECK(n.bot_suc == std::vector<NodeId>{2});
    CHECK(n.top_pre == std::vector<NodeId>{3});
    CHECK(n.bot_pre == std::vector<NodeId>{4});
}

TEST_CASE("improvement trace on a small graph") {
    const auto p = placed({{"a", 1}, {"b", 2}, {"c", 3}}, {{"b", "a"}, {"c", "a"}, {"b", "c"}});
    ImproveStats stats;
    const Layering L = improve_layering(p.g, p.L, kImprovementWeights, &stats);
    CHECK(is_feasible(p.g, L));
    CHECK(cost15(p.g, L) <= cost15(p.g, p.L));
    CHECK(values(L.canonical()) == std::vector<Layer>{2, 1, 3});
    CHECK(cost15(p.g, L) == 11);
    CHECK(stats.applied == 1);
}

TEST_CASE("improvement leaves a valid layering alone") {
    GeneratorConfig c;
    c.count = 30;
    c.seed = 32;
    c.acyclic = true;
    for (const Graph& g : generate(c)) {
        const Layering L = min_length_layering(g);
        CHECK(improve_layering(g, L) == L);
    }
}

TEST_CASE("improvement never increases the objective and stays feasible") {
    GeneratorConfig c;
    c.count = 60;
    c.seed = 33;
    for (const Graph& g : generate(c)) {
        const Layering start = construct_layering(induced_subgraph(g, weak_components(g).members[0]), 1);
        const Graph sub = induced_subgraph(g, weak_components(g).members[0]);
        const Layering L = min_length_layering(deduce_acyclic(sub, start).graph);
        const Layering I = improve_layering(sub, L);
        CHECK(is_feasible(sub, I));
        CHECK(cost15(sub, I) <= cost15(sub, L));
    }
}

TEST_CASE("pipeline on a path") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const auto r = solve_glp_heuristic(g, {}, GlpWeights::finite(1, 5));
    CHECK(r.solution.reversed.empty());
    CHECK(r.solution.cost.value() == 2);
    CHECK(metrics(g, r.solution.layering).dummy_count == 0);
}

TEST_CASE("pipeline on a triangle") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto r = solve_glp_heuristic(g, {}, GlpWeights::finite(1, 5));
    CHECK(r.solution.reversed.size() == 1);
    CHECK(r.solution.cost.value() == 9);
    CHECK(oracle::glp_brute_force(g, 1, 5).cost == 9);
    CHECK(values(r.solution.layering) == std::vector<Layer>{1, 2, 3});
}

TEST_CASE("pipeline output is feasible, canonical and deterministic") {
    GeneratorConfig c;
    c.count = 60;
    c.seed = 34;
    for (const Graph& g : generate(c)) {
        for (bool skip : {false, true}) {
            const auto a = solve_glp_heuristic(g, {9, skip}, GlpWeights::finite(1, 5));
            CHECK(is_feasible(g, a.solution.layering));
            CHECK(a.solution.layering.is_canonical());
            CHECK(is_valid(deduce_acyclic(g, a.solution.layering).graph, a.solution.layering));
            const auto b = solve_glp_heuristic(g, {9, skip}, GlpWeights::finite(1, 5));
            CHECK(a.solution.layering == b.solution.layering);
        }
    }
}

TEST_CASE("pipeline handles disconnected graphs and isolated nodes") {
    const Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}});
    const auto r = solve_glp_heuristic(g, {}, GlpWeights::finite(1, 5));
    CHECK(is_feasible(g, r.solution.layering));
    CHECK(r.solution.layering.size() == 7);
}

TEST_CASE("infinite reversal weight is rejected by profit") {
    const auto p = placed({{"v", 5}, {"s", 3}}, {{"v", "s"}});
    CHECK_THROWS(compute_profit(p.g, p.L, 0, 3, 2, GlpWeights::infinite_reversal()));
}

}
