#include <doctest.h>

#include <json.hpp>

#include "layerforge/bench.hpp"
#include "layerforge/report.hpp"
#include "oracles.hpp"

using namespace layerforge;
using oracle::make_graph;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

MethodRun run(const Graph& g, Method m, const GlpWeights& w) {
    MethodOptions o;
    o.weights = w;
    return run_method(g, m, o);
}

std::vector<NamedGraph> small_corpus(int count, std::uint64_t seed, int max_nodes = 60) {
    GeneratorConfig c;
    c.count = count;
    c.seed = seed;
    c.max_nodes = max_nodes;
    c.min_nodes = std::min(c.min_nodes, max_nodes);
    std::vector<NamedGraph> out;
    for (const Graph& g : generate(c)) out.push_back({"g" + std::to_string(out.size()), g});
    return out;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("layer json for a triangle") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto w = GlpWeights::finite(1, 5);
    const auto doc = nlohmann::json::parse(layer_json(g, run(g, Method::kExact, w), w));
    CHECK(doc["schema"] == "layerforge/1");
    CHECK(doc["method"] == "glpx");
    CHECK(doc["status"] == "optimal");
    CHECK(doc["objective"] == 9);
    CHECK(doc["weights"]["rev"] == 5);
    CHECK(doc["weights"]["max_layers"].is_null());
    CHECK(doc["reversed"].size() == 1);
    CHECK(doc["metrics"]["reversed_count"] == 1);
    CHECK(doc["metrics"]["nodes"] == 3);
    for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"c", "a"}})
        CHECK(doc["layers"][u] != doc["layers"][v]);
}

TEST_CASE("eaga on a triangle reverses c to a") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto w = GlpWeights::finite(1, 5);
    const auto doc = nlohmann::json::parse(layer_json(g, run(g, Method::kEaGa, w), w));
    CHECK(doc["reversed"] == nlohmann::json::parse(R"([["c","a"]])"));
    CHECK(doc["layers"] == nlohmann::json::parse(R"({"a":1,"b":2,"c":3})"));
}

TEST_CASE("infinite weight with a reversal has a null objective") {
    const Graph g = make_graph({{"a", "b"}, {"b", "a"}});
    const auto w = GlpWeights::infinite_reversal();
    const auto doc = nlohmann::json::parse(layer_json(g, run(g, Method::kHeuristic, w), w));
    CHECK(doc["weights"]["rev"] == "inf");
    CHECK(doc["objective"].is_null());
}

TEST_CASE("json lists normalization") {
    NormalizeReport report;
    const Graph g = read_graph("digraph { a -> a; a -> b; a -> b }", GraphFormat::kDot, &report);
    const auto w = GlpWeights::finite(1, 5);
    const auto doc = nlohmann::json::parse(layer_json(g, run(g, Method::kHeuristic, w), w, report));
    CHECK(doc["normalization"]["dropped_self_loops"] == nlohmann::json::parse(R"(["a"])"));
    CHECK(doc["normalization"]["merged_edges"][0]["count"] == 2);
}

TEST_CASE("json is byte stable") {
    const Graph g = small_corpus(1, 3)[0].graph;
    const auto w = GlpWeights::finite(1, 5);
    CHECK(layer_json(g, run(g, Method::kHeuristic, w), w) == layer_json(g, run(g, Method::kHeuristic, w), w));
}

TEST_CASE("svg of a path has three bands and no dashed edge") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}});
    const std::string svg = render_svg(g, Layering({1, 2, 3}));
    CHECK(svg.starts_with("<?xml"));
    CHECK(count(svg, "<rect") == 3);
    CHECK(count(svg, "<circle") == 3);
    CHECK(count(svg, "stroke-dasharray") == 0);
}

TEST_CASE("svg of a triangle dashes the upward edge") {
    const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const std::string svg = render_svg(g, Layering({1, 2, 3}));
    CHECK(count(svg, "class=\"reversed\"") == 1);
    CHECK(count(svg, "<line") == 3);
}

TEST_CASE("svg of the empty graph") {
    const std::string svg = render_svg(Graph(), Layering());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == 0);
}

TEST_CASE("sweep parsing") {
    const auto s = parse_sweep("wrev=10,20,inf");
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 10);
    CHECK(s[1] == 20);
    CHECK(!s[2]);
    CHECK(parse_sweep("7") == std::vector<std::optional<std::int64_t>>{7});
    CHECK_THROWS_AS(parse_sweep("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep(""), std::invalid_argument);
}

TEST_CASE("bench row arithmetic") {
    const auto corpus = small_corpus(20, 4);
    BenchOptions o;
    o.timing = false;
    const auto rows = run_bench(corpus, o);
    CHECK(rows.size() == 40);
    CHECK(rows[0].graph_id == "g0");
    CHECK(rows[0].method == Method::kEaGa);
    CHECK(rows[1].method == Method::kHeuristic);
    const auto agg = aggregate(rows, o);
    REQUIRE(agg.size() == 2);
    CHECK(agg[0].graphs == 20);
    const std::string csv = bench_csv(rows, agg);
    CHECK(csv.starts_with("# layerforge-bench/1\ngraph_id,method,"));
    CHECK(count(csv, "\n") == 2 + 40 + 2 + 1 + 2);
}

TEST_CASE("bench on a single path") {
    BenchOptions o;
    o.methods = {Method::kEaGa, Method::kHeuristic, Method::kHeuristicNoImprove, Method::kExact};
    const auto rows = run_bench({{"p3", make_graph({{"a", "b"}, {"b", "c"}})}}, o);
    REQUIRE(rows.size() == 4);
    for (const BenchRow& r : rows) {
        CHECK(r.metrics.dummy_count == 0);
        CHECK(r.metrics.reversed_count == 0);
    }
}

TEST_CASE("dummy count equals length minus edges") {
    const auto corpus = small_corpus(15, 5);
    BenchOptions o;
    o.methods = {Method::kEaGa, Method::kHeuristic, Method::kHeuristicNoImprove};
    for (const BenchRow& r : run_bench(corpus, o))
        CHECK(r.metrics.dummy_count == r.metrics.edge_length_sum - r.edges);
}

TEST_CASE("bench output does not depend on thread count") {
    const auto corpus = small_corpus(12, 6);
    BenchOptions o;
    o.timing = false;
    o.w_rev = parse_sweep("5,inf");
    const auto one = bench_csv(run_bench(corpus, o), aggregate(run_bench(corpus, o), o));
    o.jobs = 4;
    const auto rows = run_bench(corpus, o);
    CHECK(bench_csv(rows, aggregate(rows, o)) == one);
}

TEST_CASE("empty corpus is refused") {
    CHECK_THROWS_AS(run_bench({}, BenchOptions{}), std::invalid_argument);
}

TEST_CASE("aggregate table names every group") {
    const auto corpus = small_corpus(3, 7);
    BenchOptions o;
    const auto table = aggregate_table(aggregate(run_bench(corpus, o), o));
    CHECK(table.find("eaga") != std::string::npos);
    CHECK(table.find("glph") != std::string::npos);
}

}
