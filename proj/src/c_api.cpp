#include "layerforge/layerforge.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <sstream>
#include <string>

#include "layerforge/bench.hpp"
#include "layerforge/corpus.hpp"
#include "layerforge/ip_model.hpp"
#include "layerforge/methods.hpp"
#include "layerforge/network_simplex.hpp"
#include "layerforge/report.hpp"

struct lf_graph {
    layerforge::Graph graph;
    layerforge::NormalizeReport normalization;
};

struct lf_result {
    layerforge::Graph graph;
    layerforge::NormalizeReport normalization;
    layerforge::GlpWeights weights;
    layerforge::MethodRun run;
};

struct lf_corpus {
    std::vector<layerforge::NamedGraph> graphs;
};

namespace {

using namespace layerforge;

thread_local std::string g_last_error;

lf_status fail(lf_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Maps exceptions escaping `body` onto status codes.
template <typename F>
lf_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const ParseError& e) {
        return fail(LF_ERR_PARSE, e.what());
    } catch (const LpParseError& e) {
        return fail(LF_ERR_PARSE, "line " + std::to_string(e.line()) + ": " + e.what());
    } catch (const InfeasibleLayering& e) {
        return fail(LF_ERR_INFEASIBLE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(LF_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LF_ERR_INTERNAL, "out of memory");
    } catch (const std::runtime_error& e) {
        return fail(LF_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(LF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LF_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

GraphFormat to_format(lf_format f, const char* path) {
    switch (f) {
        case LF_FORMAT_DOT: return GraphFormat::kDot;
        case LF_FORMAT_EDGELIST: return GraphFormat::kEdgelist;
        case LF_FORMAT_AUTO: return path ? format_for_path(path) : GraphFormat::kEdgelist;
    }
    throw std::invalid_argument("unknown format");
}

Method to_method(lf_method m) {
    switch (m) {
        case LF_METHOD_EAGA: return Method::kEaGa;
        case LF_METHOD_GLPH: return Method::kHeuristic;
        case LF_METHOD_GLPH_STAR: return Method::kHeuristicNoImprove;
        case LF_METHOD_GLPX: return Method::kExact;
    }
    throw std::invalid_argument("unknown method");
}

GlpWeights to_weights(const lf_layer_options& o) {
    GlpWeights w = o.rev_infinite ? GlpWeights::infinite_reversal(o.w_len) : GlpWeights::finite(o.w_len, o.w_rev);
    if (o.max_layers < 0) throw std::invalid_argument("max_layers must be non-negative");
    if (o.max_layers > 0) w.max_layers = o.max_layers;
    return w;
}

lf_layer_options default_layer_options() {
    lf_layer_options o;
    lf_layer_options_init(&o);
    return o;
}

}  // namespace

extern "C" {

const char* lf_last_error(void) { return g_last_error.c_str(); }

const char* lf_version(void) { return "1.0.0"; }

void lf_string_free(char* s) { std::free(s); }

lf_status lf_method_parse(const char* text, lf_method* out) {
    if (!text || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    const auto m = parse_method(text);
    if (!m) return fail(LF_ERR_INVALID_ARGUMENT, std::string("unknown method '") + text + "'");
    switch (*m) {
        case Method::kEaGa: *out = LF_METHOD_EAGA; break;
        case Method::kHeuristic: *out = LF_METHOD_GLPH; break;
        case Method::kHeuristicNoImprove: *out = LF_METHOD_GLPH_STAR; break;
        case Method::kExact: *out = LF_METHOD_GLPX; break;
    }
    return LF_OK;
}

const char* lf_method_label(lf_method method) {
    try {
        return method_label(to_method(method)).data();
    } catch (...) {
        return "?";
    }
}

const char* lf_run_status_label(lf_run_status status) {
    switch (status) {
        case LF_RUN_OPTIMAL: return "optimal";
        case LF_RUN_HEURISTIC: return "heuristic";
        case LF_RUN_TIMEOUT: return "timeout";
        case LF_RUN_INFEASIBLE: return "infeasible";
    }
    return "?";
}

lf_status lf_graph_parse(const char* text, size_t length, lf_format format, lf_graph** out) {
    if (!text || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto g = std::make_unique<lf_graph>();
        g->graph = read_graph(std::string_view(text, length), to_format(format, nullptr), &g->normalization);
        *out = g.release();
        return LF_OK;
    });
}

lf_status lf_graph_read_file(const char* path, lf_format format, lf_graph** out) {
    if (!path || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string text = read_text_file(path);
        auto g = std::make_unique<lf_graph>();
        try {
            g->graph = read_graph(text, to_format(format, path), &g->normalization);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), e.line(), e.column(), path);
        }
        *out = g.release();
        return LF_OK;
    });
}

void lf_graph_free(lf_graph* graph) { delete graph; }

int32_t lf_graph_node_count(const lf_graph* graph) { return graph ? graph->graph.node_count() : 0; }

int32_t lf_graph_edge_count(const lf_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

int32_t lf_graph_dropped_self_loops(const lf_graph* graph) {
    return graph ? static_cast<int32_t>(graph->normalization.dropped_self_loops.size()) : 0;
}

int32_t lf_graph_merged_edges(const lf_graph* graph) {
    return graph ? static_cast<int32_t>(graph->normalization.merged.size()) : 0;
}

lf_status lf_graph_write(const lf_graph* graph, lf_format format, char** out) {
    if (!graph || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(write_graph(graph->graph, to_format(format, nullptr)));
        return LF_OK;
    });
}

void lf_layer_options_init(lf_layer_options* options) {
    if (!options) return;
    options->w_len = 1;
    options->w_rev = 5;
    options->rev_infinite = 0;
    options->max_layers = 0;
    options->seed = 0;
    options->skip_improvement = 0;
    options->timeout_seconds = 60.0;
}

lf_status lf_layer(const lf_graph* graph, lf_method method, const lf_layer_options* options, lf_result** out) {
    if (!graph || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const lf_layer_options o = options ? *options : default_layer_options();
        Method m = to_method(method);
        if (m == Method::kHeuristic && o.skip_improvement) m = Method::kHeuristicNoImprove;
        if (!(o.timeout_seconds > 0)) throw std::invalid_argument("timeout must be positive");
        auto r = std::make_unique<lf_result>();
        r->graph = graph->graph;
        r->normalization = graph->normalization;
        r->weights = to_weights(o);
        r->weights.validate(r->graph);
        MethodOptions mo;
        mo.weights = r->weights;
        mo.seed = o.seed;
        mo.timeout_seconds = o.timeout_seconds;
        r->run = run_method(r->graph, m, mo);
        *out = r.release();
        return LF_OK;
    });
}

void lf_result_free(lf_result* result) { delete result; }

lf_run_status lf_result_status(const lf_result* result) {
    if (!result) return LF_RUN_INFEASIBLE;
    switch (result->run.status) {
        case RunStatus::kOptimal: return LF_RUN_OPTIMAL;
        case RunStatus::kHeuristic: return LF_RUN_HEURISTIC;
        case RunStatus::kTimeout: return LF_RUN_TIMEOUT;
        case RunStatus::kInfeasible: return LF_RUN_INFEASIBLE;
    }
    return LF_RUN_INFEASIBLE;
}

int lf_result_has_layering(const lf_result* result) { return result && result->run.solution ? 1 : 0; }

int32_t lf_result_layer(const lf_result* result, int32_t node) {
    if (!result || !result->run.solution || node < 0 || node >= result->graph.node_count()) return 0;
    return result->run.solution->layering[node];
}

int32_t lf_result_reversed_count(const lf_result* result) {
    return result && result->run.solution ? static_cast<int32_t>(result->run.solution->reversed.size()) : 0;
}

int lf_result_objective(const lf_result* result, int64_t* out) {
    if (!result || !result->run.solution || !out) return 0;
    const auto k = result->run.solution->cost.value();
    if (!k) return 0;
    *out = *k;
    return 1;
}

lf_status lf_result_json(const lf_result* result, char** out) {
    if (!result || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(layer_json(result->graph, result->run, result->weights, result->normalization));
        return LF_OK;
    });
}

lf_status lf_result_svg(const lf_result* result, char** out) {
    if (!result || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    if (!result->run.solution) return fail(LF_ERR_INFEASIBLE, "no layering to render");
    return guarded([&] {
        *out = dup_string(render_svg(result->graph, result->run.solution->layering));
        return LF_OK;
    });
}

lf_status lf_export_lp(const lf_graph* graph, const lf_layer_options* options, char** out) {
    if (!graph || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const lf_layer_options o = options ? *options : default_layer_options();
        GlpWeights w = to_weights(o);
        w.validate(graph->graph);
        if (w.rev_infinite) w = w.finite_surrogate(graph->graph);
        *out = dup_string(export_lp(build_model(graph->graph, w)));
        return LF_OK;
    });
}

void lf_generator_config_init(lf_generator_config* config) {
    if (!config) return;
    const GeneratorConfig d;
    config->min_nodes = d.min_nodes;
    config->max_nodes = d.max_nodes;
    config->edge_factor = d.edge_factor;
    config->count = d.count;
    config->seed = d.seed;
    config->acyclic = 0;
}

lf_status lf_corpus_generate(const lf_generator_config* config, lf_corpus** out) {
    if (!config || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        GeneratorConfig c;
        c.min_nodes = config->min_nodes;
        c.max_nodes = config->max_nodes;
        c.edge_factor = config->edge_factor;
        c.count = config->count;
        c.seed = config->seed;
        c.acyclic = config->acyclic != 0;
        c.validate();
        auto corpus = std::make_unique<lf_corpus>();
        const int width = static_cast<int>(std::to_string(std::max(c.count - 1, 0)).size());
        for (int i = 0; i < c.count; ++i) {
            Graph g = generate_one(c, static_cast<std::uint64_t>(i));
            if (g.empty()) continue;
            std::string idx = std::to_string(i);
            idx.insert(0, static_cast<std::size_t>(width) - idx.size(), '0');
            corpus->graphs.push_back({"gen-" + idx, std::move(g)});
        }
        *out = corpus.release();
        return LF_OK;
    });
}

lf_status lf_corpus_load_dir(const char* dir, lf_corpus** out) {
    if (!dir || !out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto corpus = std::make_unique<lf_corpus>();
        corpus->graphs = load_corpus_dir(dir);
        *out = corpus.release();
        return LF_OK;
    });
}

void lf_corpus_free(lf_corpus* corpus) { delete corpus; }

size_t lf_corpus_size(const lf_corpus* corpus) { return corpus ? corpus->graphs.size() : 0; }

lf_status lf_corpus_filter_tall(lf_corpus* corpus, int32_t min_nodes) {
    if (!corpus) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::erase_if(corpus->graphs, [&](const NamedGraph& ng) {
            return ng.graph.node_count() < min_nodes || is_tree_or_path(ng.graph);
        });
        return LF_OK;
    });
}

lf_status lf_corpus_write_dir(const lf_corpus* corpus, const char* dir, lf_format format) {
    if (!corpus || !dir) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        write_corpus_dir(corpus->graphs, dir, format == LF_FORMAT_DOT ? GraphFormat::kDot : GraphFormat::kEdgelist);
        return LF_OK;
    });
}

void lf_bench_options_init(lf_bench_options* options) {
    if (!options) return;
    options->methods = "eaga,glph";
    options->sweep = "5";
    options->w_len = 1;
    options->max_layers = 0;
    options->seed = 0;
    options->timeout_per_graph = 60.0;
    options->jobs = 1;
    options->timing = 1;
}

lf_status lf_bench(const lf_corpus* corpus, const lf_bench_options* options, char** csv_out, char** summary_out) {
    if (!corpus || !csv_out) return fail(LF_ERR_INVALID_ARGUMENT, "null argument");
    if (corpus->graphs.empty()) return fail(LF_ERR_EMPTY_CORPUS, "empty corpus");
    return guarded([&] {
        lf_bench_options o;
        lf_bench_options_init(&o);
        if (options) o = *options;
        BenchOptions b;
        b.methods.clear();
        std::stringstream list(o.methods ? o.methods : "eaga,glph");
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto m = parse_method(item);
            if (!m) throw std::invalid_argument("unknown method '" + item + "'");
            b.methods.push_back(*m);
        }
        if (b.methods.empty()) throw std::invalid_argument("no methods given");
        b.w_rev = parse_sweep(o.sweep ? o.sweep : "5");
        b.w_len = o.w_len;
        if (o.max_layers < 0) throw std::invalid_argument("max_layers must be non-negative");
        if (o.max_layers > 0) b.max_layers = o.max_layers;
        b.seed = o.seed;
        if (!(o.timeout_per_graph > 0)) throw std::invalid_argument("timeout must be positive");
        b.timeout_per_graph = o.timeout_per_graph;
        b.jobs = o.jobs;
        b.timing = o.timing != 0;
        const auto rows = run_bench(corpus->graphs, b);
        const auto aggs = aggregate(rows, b);
        char* csv = dup_string(bench_csv(rows, aggs));
        if (summary_out) {
            try {
                *summary_out = dup_string(aggregate_table(aggs));
            } catch (...) {
                std::free(csv);
                throw;
            }
        }
        *csv_out = csv;
        return LF_OK;
    });
}

}  // extern "C"
