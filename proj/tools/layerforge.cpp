#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "layerforge/layerforge.h"

namespace {

struct Failure {
    std::string message;
};

void check(lf_status status) {
    if (status != LF_OK) throw Failure{lf_last_error()};
}

// Owns a string returned by the C API.
struct CString {
    char* ptr = nullptr;
    ~CString() { lf_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{"cannot write " + path};
    out << text;
    if (!out) throw Failure{"cannot write " + path};
}

lf_format parse_format(const std::string& text) {
    if (text == "auto") return LF_FORMAT_AUTO;
    if (text == "dot") return LF_FORMAT_DOT;
    if (text == "edgelist") return LF_FORMAT_EDGELIST;
    throw Failure{"unknown format '" + text + "'"};
}

void apply_wrev(const std::string& text, lf_layer_options& o) {
    if (text == "inf") {
        o.rev_infinite = 1;
        return;
    }
    try {
        std::size_t used = 0;
        o.w_rev = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw Failure{"--wrev expects an integer or 'inf', got '" + text + "'"};
    }
}

using GraphHandle = std::unique_ptr<lf_graph, void (*)(lf_graph*)>;

GraphHandle load(const std::string& input, const std::string& format) {
    lf_graph* raw = nullptr;
    check(lf_graph_read_file(input.c_str(), parse_format(format), &raw));
    GraphHandle g(raw, lf_graph_free);
    if (lf_graph_dropped_self_loops(g.get()) > 0)
        std::cerr << "note: dropped " << lf_graph_dropped_self_loops(g.get()) << " self-loop(s)\n";
    if (lf_graph_merged_edges(g.get()) > 0)
        std::cerr << "note: merged " << lf_graph_merged_edges(g.get()) << " group(s) of parallel edges\n";
    return g;
}

struct LayerArgs {
    std::string input, format = "auto", method = "glph", wrev, json, svg;
    std::int64_t wlen = 1;
    int max_layers = 0;
    std::uint64_t seed = 0;
    bool skip_improvement = false;
    double timeout = 60.0;
};

int cmd_layer(const LayerArgs& a) {
    lf_method method;
    check(lf_method_parse(a.method.c_str(), &method));
    if (method == LF_METHOD_GLPX && a.wrev.empty()) throw Failure{"--method glpx requires --wrev"};
    lf_layer_options o;
    lf_layer_options_init(&o);
    o.w_len = a.wlen;
    if (!a.wrev.empty()) apply_wrev(a.wrev, o);
    o.max_layers = a.max_layers;
    o.seed = a.seed;
    o.skip_improvement = a.skip_improvement ? 1 : 0;
    o.timeout_seconds = a.timeout;

    GraphHandle g = load(a.input, a.format);
    lf_result* raw = nullptr;
    check(lf_layer(g.get(), method, &o, &raw));
    std::unique_ptr<lf_result, void (*)(lf_result*)> result(raw, lf_result_free);

    CString json;
    check(lf_result_json(result.get(), &json.ptr));
    write_output(a.json, json.str());
    if (!a.svg.empty() && lf_result_has_layering(result.get())) {
        CString svg;
        check(lf_result_svg(result.get(), &svg.ptr));
        write_output(a.svg, svg.str());
    }
    switch (lf_result_status(result.get())) {
        case LF_RUN_TIMEOUT:
            std::cerr << "timeout: reporting the best layering found\n";
            return 2;
        case LF_RUN_INFEASIBLE: std::cerr << "no feasible layering within the layer bound\n"; return 1;
        default: return 0;
    }
}

struct BenchArgs {
    std::string corpus, methods = "eaga,glph", sweep = "wrev=5", csv;
    int generate = 0, gen_min = 17, gen_max = 60, filter_tall = 0, jobs = 1, max_layers = 0;
    std::int64_t wlen = 1;
    std::uint64_t seed = 0;
    double timeout = 60.0;
    bool no_timing = false;
};

int cmd_bench(const BenchArgs& a) {
    lf_corpus* raw = nullptr;
    if (!a.corpus.empty()) {
        check(lf_corpus_load_dir(a.corpus.c_str(), &raw));
    } else {
        lf_generator_config c;
        lf_generator_config_init(&c);
        c.count = a.generate;
        c.seed = a.seed;
        c.min_nodes = a.gen_min;
        c.max_nodes = a.gen_max;
        check(lf_corpus_generate(&c, &raw));
    }
    std::unique_ptr<lf_corpus, void (*)(lf_corpus*)> corpus(raw, lf_corpus_free);
    if (a.filter_tall > 0) check(lf_corpus_filter_tall(corpus.get(), a.filter_tall));

    lf_bench_options o;
    lf_bench_options_init(&o);
    o.methods = a.methods.c_str();
    o.sweep = a.sweep.c_str();
    o.w_len = a.wlen;
    o.max_layers = a.max_layers;
    o.seed = a.seed;
    o.timeout_per_graph = a.timeout;
    o.jobs = a.jobs;
    o.timing = a.no_timing ? 0 : 1;
    CString csv, summary;
    check(lf_bench(corpus.get(), &o, &csv.ptr, &summary.ptr));
    write_output(a.csv, csv.str());
    (a.csv.empty() || a.csv == "-" ? std::cerr : std::cout) << summary.str();
    return 0;
}

struct ExportArgs {
    std::string input, format = "auto", wrev = "5", out;
    std::int64_t wlen = 1;
    int max_layers = 0;
};

int cmd_export_ip(const ExportArgs& a) {
    lf_layer_options o;
    lf_layer_options_init(&o);
    o.w_len = a.wlen;
    apply_wrev(a.wrev, o);
    o.max_layers = a.max_layers;
    GraphHandle g = load(a.input, a.format);
    CString lp;
    check(lf_export_lp(g.get(), &o, &lp.ptr));
    write_output(a.out, lp.str());
    return 0;
}

struct GenerateArgs {
    std::string out_dir, format = "edgelist";
    int count = 160, min_nodes = 17, max_nodes = 60, filter_tall = 0;
    double edge_factor = 1.5;
    std::uint64_t seed = 0;
    bool acyclic = false;
};

int cmd_generate(const GenerateArgs& a) {
    lf_generator_config c;
    lf_generator_config_init(&c);
    c.count = a.count;
    c.min_nodes = a.min_nodes;
    c.max_nodes = a.max_nodes;
    c.edge_factor = a.edge_factor;
    c.seed = a.seed;
    c.acyclic = a.acyclic ? 1 : 0;
    lf_corpus* raw = nullptr;
    check(lf_corpus_generate(&c, &raw));
    std::unique_ptr<lf_corpus, void (*)(lf_corpus*)> corpus(raw, lf_corpus_free);
    if (a.filter_tall > 0) check(lf_corpus_filter_tall(corpus.get(), a.filter_tall));
    const lf_format f = parse_format(a.format);
    check(lf_corpus_write_dir(corpus.get(), a.out_dir.c_str(), f == LF_FORMAT_AUTO ? LF_FORMAT_EDGELIST : f));
    std::cerr << "wrote " << lf_corpus_size(corpus.get()) << " graphs to " << a.out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layer assignment with simultaneous cycle removal"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lf_version());

    LayerArgs layer;
    auto* l = app.add_subcommand("layer", "Layer one graph and write a JSON report");
    l->add_option("--input", layer.input, "Graph file")->required();
    l->add_option("--format", layer.format, "auto|dot|edgelist")->capture_default_str();
    l->add_option("--method", layer.method, "eaga|glph|glph-star|glpx")->capture_default_str();
    l->add_option("--wlen", layer.wlen, "Edge length weight")->capture_default_str();
    l->add_option("--wrev", layer.wrev, "Reversal weight, integer or inf (default 5; required for glpx)");
    l->add_option("--max-layers", layer.max_layers, "Layer bound for glpx (0 = none)");
    l->add_option("--seed", layer.seed, "Random seed")->capture_default_str();
    l->add_flag("--skip-improvement", layer.skip_improvement, "glph without the improvement step");
    l->add_option("--timeout", layer.timeout, "glpx time limit in seconds")->capture_default_str();
    l->add_option("--json", layer.json, "JSON output file (default stdout)");
    l->add_option("--svg", layer.svg, "SVG debug render");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run methods over a corpus and emit CSV");
    auto* corpus_opt = b->add_option("--corpus", bench.corpus, "Directory of graph files");
    auto* gen_opt = b->add_option("--generate", bench.generate, "Generate N random graphs instead");
    corpus_opt->excludes(gen_opt);
    b->add_option("--gen-min-nodes", bench.gen_min, "Generated graph minimum size")->capture_default_str();
    b->add_option("--gen-max-nodes", bench.gen_max, "Generated graph maximum size")->capture_default_str();
    b->add_option("--filter-tall", bench.filter_tall, "Drop graphs below N nodes and trees/paths");
    b->add_option("--methods", bench.methods, "Comma-separated methods")->capture_default_str();
    b->add_option("--sweep", bench.sweep, "Reversal weights, e.g. wrev=10,20,30")->capture_default_str();
    b->add_option("--wlen", bench.wlen, "Edge length weight")->capture_default_str();
    b->add_option("--max-layers", bench.max_layers, "Layer bound for glpx (0 = none)");
    b->add_option("--csv", bench.csv, "CSV output file (default stdout)");
    b->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
    b->add_option("--timeout-per-graph", bench.timeout, "glpx time limit per run")->capture_default_str();
    b->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
    b->add_flag("--no-timing", bench.no_timing, "Write wall_time_ms as 0");

    ExportArgs ex;
    auto* e = app.add_subcommand("export-ip", "Write the integer program in LP format");
    e->add_option("--input", ex.input, "Graph file")->required();
    e->add_option("--format", ex.format, "auto|dot|edgelist")->capture_default_str();
    e->add_option("--wlen", ex.wlen, "Edge length weight")->capture_default_str();
    e->add_option("--wrev", ex.wrev, "Reversal weight, integer or inf")->capture_default_str();
    e->add_option("--max-layers", ex.max_layers, "Layer bound (0 = number of nodes)");
    e->add_option("--out", ex.out, "LP output file (default stdout)");

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a random corpus");
    g->add_option("--out-dir", gen.out_dir, "Target directory")->required();
    g->add_option("--count", gen.count, "Number of graphs")->capture_default_str();
    g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    g->add_option("--min-nodes", gen.min_nodes, "Minimum nodes")->capture_default_str();
    g->add_option("--max-nodes", gen.max_nodes, "Maximum nodes")->capture_default_str();
    g->add_option("--edge-factor", gen.edge_factor, "Edges per node")->capture_default_str();
    g->add_flag("--acyclic", gen.acyclic, "Orient edges along a random ranking");
    g->add_option("--filter-tall", gen.filter_tall, "Drop graphs below N nodes and trees/paths");
    g->add_option("--format", gen.format, "dot|edgelist")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*l) return cmd_layer(layer);
        if (*b) {
            if (bench.corpus.empty() && bench.generate <= 0) throw Failure{"bench needs --corpus or --generate N"};
            return cmd_bench(bench);
        }
        if (*e) return cmd_export_ip(ex);
        if (*g) return cmd_generate(gen);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return 1;
    }
    return 1;
}
