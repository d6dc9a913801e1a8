#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"

// Reference implementations used only by tests. They share no code with the
// library beyond the Graph container.
namespace oracle {

using layerforge::Graph;
using layerforge::Layer;

Graph make_graph(std::initializer_list<std::pair<const char*, const char*>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

struct Score {
    std::int64_t length = 0;
    std::int64_t reversed = 0;
    bool feasible = true;
};

Score score(const Graph& g, const std::vector<Layer>& L);
Score score(const Graph& g, const layerforge::Layering& L);

/// Exhaustive GLP optimum over [1, top]^V (top = n when 0) with finite weights.
struct GlpOptimum {
    std::int64_t cost = 0;
    std::int64_t length = 0;
    std::int64_t reversed = 0;
    bool feasible = false;
};
GlpOptimum glp_brute_force(const Graph& g, std::int64_t w_len, std::int64_t w_rev, int top = 0);

/// Exhaustive GLP optimum with infinite reversal weight: (reversed, length) lexicographic.
GlpOptimum glp_brute_force_lex(const Graph& g, int top = 0);

/// Exhaustive DLP optimum: minimum total length over valid layerings in [1, n]^V.
std::int64_t dlp_brute_force(const Graph& g);

/// Depth-first cycle check.
bool acyclic(const Graph& g);

/// Directed graph read off a layering: every edge points from lower to higher layer.
Graph orient_by(const Graph& g, const std::vector<Layer>& L);

}  // namespace oracle
