/* layerforge C API: opaque handles, status codes, caller-freed strings. */
#ifndef LAYERFORGE_H
#define LAYERFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LF_API __declspec(dllexport)
#else
#define LF_API __attribute__((visibility("default")))
#endif

typedef enum lf_status {
    LF_OK = 0,
    LF_ERR_INVALID_ARGUMENT = 1,
    LF_ERR_PARSE = 2,
    LF_ERR_IO = 3,
    LF_ERR_INFEASIBLE = 4,
    LF_ERR_EMPTY_CORPUS = 5,
    LF_ERR_INTERNAL = 6
} lf_status;

typedef enum lf_format { LF_FORMAT_AUTO = 0, LF_FORMAT_DOT = 1, LF_FORMAT_EDGELIST = 2 } lf_format;

typedef enum lf_method { LF_METHOD_EAGA = 0, LF_METHOD_GLPH = 1, LF_METHOD_GLPH_STAR = 2, LF_METHOD_GLPX = 3 } lf_method;

typedef enum lf_run_status {
    LF_RUN_OPTIMAL = 0,
    LF_RUN_HEURISTIC = 1,
    LF_RUN_TIMEOUT = 2,
    LF_RUN_INFEASIBLE = 3
} lf_run_status;

typedef struct lf_graph lf_graph;
typedef struct lf_result lf_result;
typedef struct lf_corpus lf_corpus;

/* Message for the last failing call on this thread; never NULL. */
LF_API const char* lf_last_error(void);
LF_API const char* lf_version(void);
/* Frees strings returned through char** out-parameters. */
LF_API void lf_string_free(char* s);

LF_API lf_status lf_method_parse(const char* text, lf_method* out);
LF_API const char* lf_method_label(lf_method method);
LF_API const char* lf_run_status_label(lf_run_status status);

/* ---- graphs ---- */

/* LF_FORMAT_AUTO is treated as edgelist here. */
LF_API lf_status lf_graph_parse(const char* text, size_t length, lf_format format, lf_graph** out);
/* LF_FORMAT_AUTO picks DOT for .dot/.gv files. */
LF_API lf_status lf_graph_read_file(const char* path, lf_format format, lf_graph** out);
LF_API void lf_graph_free(lf_graph* graph);
LF_API int32_t lf_graph_node_count(const lf_graph* graph);
LF_API int32_t lf_graph_edge_count(const lf_graph* graph);
/* Self-loops dropped and parallel edges merged while reading. */
LF_API int32_t lf_graph_dropped_self_loops(const lf_graph* graph);
LF_API int32_t lf_graph_merged_edges(const lf_graph* graph);
LF_API lf_status lf_graph_write(const lf_graph* graph, lf_format format, char** out);

/* ---- layering ---- */

typedef struct lf_layer_options {
    int64_t w_len;          /* default 1 */
    int64_t w_rev;          /* default 5; ignored when rev_infinite */
    int rev_infinite;       /* default 0 */
    int32_t max_layers;     /* 0 = unbounded */
    uint64_t seed;          /* default 0 */
    int skip_improvement;   /* glph only; equivalent to LF_METHOD_GLPH_STAR */
    double timeout_seconds; /* glpx; default 60 */
} lf_layer_options;

LF_API void lf_layer_options_init(lf_layer_options* options);

/* A timeout still yields LF_OK with status LF_RUN_TIMEOUT and the incumbent. */
LF_API lf_status lf_layer(const lf_graph* graph, lf_method method, const lf_layer_options* options,
                          lf_result** out);
LF_API void lf_result_free(lf_result* result);
LF_API lf_run_status lf_result_status(const lf_result* result);
/* 1 when a layering is present. */
LF_API int lf_result_has_layering(const lf_result* result);
LF_API int32_t lf_result_layer(const lf_result* result, int32_t node);
LF_API int32_t lf_result_reversed_count(const lf_result* result);
/* Returns 0 and leaves *out untouched when the objective is not finite. */
LF_API int lf_result_objective(const lf_result* result, int64_t* out);
LF_API lf_status lf_result_json(const lf_result* result, char** out);
LF_API lf_status lf_result_svg(const lf_result* result, char** out);

/* ---- integer program ---- */

LF_API lf_status lf_export_lp(const lf_graph* graph, const lf_layer_options* options, char** out);

/* ---- corpora ---- */

typedef struct lf_generator_config {
    int32_t min_nodes;  /* default 17 */
    int32_t max_nodes;  /* default 60 */
    double edge_factor; /* default 1.5 */
    int32_t count;      /* default 1 */
    uint64_t seed;      /* default 0 */
    int acyclic;        /* default 0 */
} lf_generator_config;

LF_API void lf_generator_config_init(lf_generator_config* config);
LF_API lf_status lf_corpus_generate(const lf_generator_config* config, lf_corpus** out);
LF_API lf_status lf_corpus_load_dir(const char* dir, lf_corpus** out);
LF_API void lf_corpus_free(lf_corpus* corpus);
LF_API size_t lf_corpus_size(const lf_corpus* corpus);
/* Keeps graphs with >= min_nodes nodes that are not trees or paths. */
LF_API lf_status lf_corpus_filter_tall(lf_corpus* corpus, int32_t min_nodes);
LF_API lf_status lf_corpus_write_dir(const lf_corpus* corpus, const char* dir, lf_format format);

/* ---- benchmark ---- */

typedef struct lf_bench_options {
    const char* methods;      /* comma list, default "eaga,glph" */
    const char* sweep;        /* w_rev list, e.g. "wrev=10,20" or "5,inf"; default "5" */
    int64_t w_len;            /* default 1 */
    int32_t max_layers;       /* 0 = unbounded */
    uint64_t seed;            /* default 0 */
    double timeout_per_graph; /* default 60 */
    int jobs;                 /* default 1 */
    int timing;               /* default 1; 0 writes wall_time_ms as 0 */
} lf_bench_options;

LF_API void lf_bench_options_init(lf_bench_options* options);
/* csv_out receives rows plus aggregate block; summary_out (may be NULL) a text table. */
LF_API lf_status lf_bench(const lf_corpus* corpus, const lf_bench_options* options, char** csv_out,
                          char** summary_out);

#ifdef __cplusplus
}
#endif

#endif
