#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "layerforge/layerforge.h"

namespace {

const char kTriangle[] = "digraph g { a -> b; b -> c; c -> a; }";

lf_graph* parse(const char* text, lf_format format = LF_FORMAT_DOT) {
    lf_graph* g = nullptr;
    REQUIRE(lf_graph_parse(text, std::strlen(text), format, &g) == LF_OK);
    return g;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    lf_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and labels") {
    CHECK(std::string(lf_version()) == "1.0.0");
    lf_method m;
    CHECK(lf_method_parse("glpx", &m) == LF_OK);
    CHECK(m == LF_METHOD_GLPX);
    CHECK(lf_method_parse("glph*", &m) == LF_OK);
    CHECK(m == LF_METHOD_GLPH_STAR);
    CHECK(lf_method_parse("nope", &m) == LF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(lf_last_error()).size() > 0);
    CHECK(std::string(lf_method_label(LF_METHOD_EAGA)) == "eaga");
    CHECK(std::string(lf_run_status_label(LF_RUN_OPTIMAL)) == "optimal");
}

TEST_CASE("graph handle") {
    lf_graph* g = parse("digraph { a -> a; a -> b; a -> b; b -> c }");
    CHECK(lf_graph_node_count(g) == 3);
    CHECK(lf_graph_edge_count(g) == 2);
    CHECK(lf_graph_dropped_self_loops(g) == 1);
    CHECK(lf_graph_merged_edges(g) == 1);
    char* text = nullptr;
    REQUIRE(lf_graph_write(g, LF_FORMAT_EDGELIST, &text) == LF_OK);
    CHECK(take(text) == "a\nb\nc\na b 2\nb c\n");
    lf_graph_free(g);
    lf_graph_free(nullptr);
}

TEST_CASE("parse errors") {
    lf_graph* g = nullptr;
    const char bad[] = "digraph {\n a -> ;\n}";
    CHECK(lf_graph_parse(bad, std::strlen(bad), LF_FORMAT_DOT, &g) == LF_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(lf_last_error()).starts_with("2:"));
    CHECK(lf_graph_parse(nullptr, 0, LF_FORMAT_DOT, &g) == LF_ERR_INVALID_ARGUMENT);
    CHECK(lf_graph_read_file("/nonexistent/x.dot", LF_FORMAT_AUTO, &g) == LF_ERR_IO);
}

TEST_CASE("layering the triangle with every method") {
    lf_graph* g = parse(kTriangle);
    lf_layer_options o;
    lf_layer_options_init(&o);
    CHECK(o.w_len == 1);
    CHECK(o.w_rev == 5);
    for (lf_method m : {LF_METHOD_EAGA, LF_METHOD_GLPH, LF_METHOD_GLPH_STAR, LF_METHOD_GLPX}) {
        lf_result* r = nullptr;
        REQUIRE(lf_layer(g, m, &o, &r) == LF_OK);
        CHECK(lf_result_has_layering(r) == 1);
        CHECK(lf_result_reversed_count(r) == 1);
        std::int64_t k = 0;
        CHECK(lf_result_objective(r, &k) == 1);
        CHECK(k == 9);
        for (int v = 0; v < 3; ++v) CHECK(lf_result_layer(r, v) >= 1);
        char* json = nullptr;
        REQUIRE(lf_result_json(r, &json) == LF_OK);
        CHECK(take(json).find("\"schema\": \"layerforge/1\"") != std::string::npos);
        char* svg = nullptr;
        REQUIRE(lf_result_svg(r, &svg) == LF_OK);
        CHECK(take(svg).find("</svg>") != std::string::npos);
        lf_result_free(r);
    }
    lf_graph_free(g);
}

TEST_CASE("infinite reversal weight and layer bounds") {
    lf_graph* g = parse(kTriangle);
    lf_layer_options o;
    lf_layer_options_init(&o);
    o.rev_infinite = 1;
    lf_result* r = nullptr;
    REQUIRE(lf_layer(g, LF_METHOD_GLPX, &o, &r) == LF_OK);
    std::int64_t k = -1;
    CHECK(lf_result_objective(r, &k) == 0);
    CHECK(k == -1);
    lf_result_free(r);

    lf_layer_options_init(&o);
    o.max_layers = 2;
    r = nullptr;
    REQUIRE(lf_layer(g, LF_METHOD_GLPX, &o, &r) == LF_OK);
    CHECK(lf_result_status(r) == LF_RUN_INFEASIBLE);
    CHECK(lf_result_has_layering(r) == 0);
    CHECK(lf_result_reversed_count(r) == 0);
    lf_result_free(r);
    r = nullptr;

    lf_layer_options_init(&o);
    o.w_len = 0;
    CHECK(lf_layer(g, LF_METHOD_GLPH, &o, &r) == LF_ERR_INVALID_ARGUMENT);
    lf_graph_free(g);
}

TEST_CASE("lp export") {
    lf_graph* g = parse(kTriangle);
    lf_layer_options o;
    lf_layer_options_init(&o);
    char* lp = nullptr;
    REQUIRE(lf_export_lp(g, &o, &lp) == LF_OK);
    const std::string text = take(lp);
    CHECK(text.find("up_c_a: 3 r_c_a + l_a - l_c >= 1") != std::string::npos);
    o.rev_infinite = 1;
    REQUIRE(lf_export_lp(g, &o, &lp) == LF_OK);
    // surrogate: 1 + 1 * 2 * 3
    CHECK(take(lp).find("7 r_a_b") != std::string::npos);
    lf_graph_free(g);
}

TEST_CASE("corpus and bench") {
    lf_generator_config c;
    lf_generator_config_init(&c);
    c.count = 6;
    c.seed = 3;
    lf_corpus* corpus = nullptr;
    REQUIRE(lf_corpus_generate(&c, &corpus) == LF_OK);
    CHECK(lf_corpus_size(corpus) == 6);

    const auto dir = std::filesystem::temp_directory_path() / "layerforge-capi-test";
    std::filesystem::remove_all(dir);
    REQUIRE(lf_corpus_write_dir(corpus, dir.string().c_str(), LF_FORMAT_EDGELIST) == LF_OK);
    lf_corpus* loaded = nullptr;
    REQUIRE(lf_corpus_load_dir(dir.string().c_str(), &loaded) == LF_OK);
    CHECK(lf_corpus_size(loaded) == 6);

    lf_bench_options b;
    lf_bench_options_init(&b);
    b.timing = 0;
    char* csv = nullptr;
    char* summary = nullptr;
    REQUIRE(lf_bench(corpus, &b, &csv, &summary) == LF_OK);
    const std::string a = take(csv);
    CHECK(a.starts_with("# layerforge-bench/1\n"));
    CHECK(take(summary).find("glph") != std::string::npos);
    REQUIRE(lf_bench(loaded, &b, &csv, nullptr) == LF_OK);
    CHECK(take(csv) == a);

    REQUIRE(lf_corpus_filter_tall(loaded, 1000) == LF_OK);
    CHECK(lf_corpus_size(loaded) == 0);
    CHECK(lf_bench(loaded, &b, &csv, nullptr) == LF_ERR_EMPTY_CORPUS);
    lf_corpus_free(loaded);
    lf_corpus_free(corpus);
    std::filesystem::remove_all(dir);
}
