#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"
#include "layerforge/methods.hpp"

namespace layerforge {

inline constexpr const char* kJsonSchema = "layerforge/1";

/// Machine-readable result of one method run on a normalized graph:
/// schema, method, weights, status, layers by label, reversed pairs,
/// metrics and objective (null when an infinite reversal weight is paid).
std::string layer_json(const Graph& g, const MethodRun& run, const GlpWeights& weights,
                       const NormalizeReport& normalization = {});

/// SVG 1.1 debug view: one band per layer, nodes in id order, straight
/// edges, edges pointing upward dashed.
std::string render_svg(const Graph& g, const Layering& L);

}  // namespace layerforge
