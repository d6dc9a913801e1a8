#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layerforge/corpus.hpp"
#include "layerforge/methods.hpp"

namespace layerforge {

inline constexpr const char* kBenchVersion = "layerforge-bench/1";

struct BenchOptions {
    std::vector<Method> methods{Method::kEaGa, Method::kHeuristic};
    std::int64_t w_len = 1;
    /// Reversal weights to sweep; nullopt means infinite.
    std::vector<std::optional<std::int64_t>> w_rev{5};
    std::optional<int> max_layers;
    std::uint64_t seed = 0;
    double timeout_per_graph = 60.0;
    int jobs = 1;
    /// When false, wall_time_ms is written as 0 so output is byte-stable.
    bool timing = true;
};

struct BenchRow {
    std::string graph_id;
    Method method = Method::kEaGa;
    std::int64_t w_len = 1;
    std::optional<std::int64_t> w_rev;
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    MetricsReport metrics;
    std::optional<std::int64_t> objective;
    double wall_time_ms = 0;
    RunStatus status = RunStatus::kHeuristic;
};

struct BenchAggregate {
    Method method = Method::kEaGa;
    std::int64_t w_len = 1;
    std::optional<std::int64_t> w_rev;
    std::int64_t graphs = 0;
    std::int64_t timeouts = 0;
    double mean_reversed = 0;
    double mean_dummies = 0;
    double mean_edge_length = 0;
    double mean_layers = 0;
    double mean_max_width = 0;
    double mean_est_area = 0;
    double mean_wall_time_ms = 0;
};

/// Parses "10,20,inf" (an optional "wrev=" prefix is accepted).
std::vector<std::optional<std::int64_t>> parse_sweep(const std::string& text);

/// One row per (graph, method, w_rev), ordered graph-major, then method and
/// sweep order as given. Graphs run on `jobs` threads; order is unaffected.
/// Throws std::invalid_argument on an empty corpus.
std::vector<BenchRow> run_bench(const std::vector<NamedGraph>& corpus, const BenchOptions& options);

/// Means per (method, w_rev) in option order; timed-out rows use their incumbent.
std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows, const BenchOptions& options);

/// Version line, fixed header, rows, a blank line, then the aggregate table.
std::string bench_csv(const std::vector<BenchRow>& rows, const std::vector<BenchAggregate>& aggregates);

/// Human-readable aggregate table.
std::string aggregate_table(const std::vector<BenchAggregate>& aggregates);

}  // namespace layerforge
