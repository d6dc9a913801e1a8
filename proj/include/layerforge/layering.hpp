#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "layerforge/graph.hpp"

namespace layerforge {

using Layer = std::int32_t;

/// Node -> layer index. Solvers work with raw (possibly negative) indices;
/// canonical() shifts to 1-based and removes layers holding no node.
class Layering {
public:
    Layering() = default;
    explicit Layering(std::vector<Layer> layers) : layers_(std::move(layers)) {}
    Layering(std::size_t n, Layer value) : layers_(n, value) {}

    std::size_t size() const { return layers_.size(); }
    bool empty() const { return layers_.empty(); }
    Layer operator[](NodeId v) const { return layers_[static_cast<std::size_t>(v)]; }
    Layer& operator[](NodeId v) { return layers_[static_cast<std::size_t>(v)]; }
    std::span<const Layer> values() const { return layers_; }

    Layer min_layer() const;
    Layer max_layer() const;
    /// Number of distinct layer indices in use.
    int layer_count() const;

    Layering shifted(Layer delta) const;
    Layering canonical() const;
    bool is_canonical() const;

    friend bool operator==(const Layering&, const Layering&) = default;

private:
    std::vector<Layer> layers_;
};

/// Weighting of the two objective terms plus an optional bound on the
/// number of layers. An infinite reversal weight makes the reversed-edge
/// term dominate any length difference.
struct GlpWeights {
    std::int64_t len = 1;
    std::int64_t rev = 5;
    bool rev_infinite = false;
    std::optional<int> max_layers;

    static GlpWeights finite(std::int64_t len, std::int64_t rev) { return {len, rev, false, std::nullopt}; }
    static GlpWeights infinite_reversal(std::int64_t len = 1) { return {len, 0, true, std::nullopt}; }

    /// Throws std::invalid_argument on w_len < 1, finite w_rev < 1, or a
    /// layer bound outside [1, n].
    void validate(const Graph& g) const;

    /// Finite stand-in for an infinite reversal weight: one more than the
    /// largest possible weighted length term. Returns *this if already finite.
    GlpWeights finite_surrogate(const Graph& g) const;
};

/// Objective value of a layering under a fixed set of weights.
class Cost {
public:
    Cost() = default;
    Cost(std::int64_t length, std::int64_t reversed, const GlpWeights& w);

    /// Weighted total edge length (sum of weight * |L(t) - L(s)|).
    std::int64_t length() const { return length_; }
    /// Weighted number of reversed edges.
    std::int64_t reversed() const { return reversed_; }
    /// k; nullopt when the reversal weight is infinite and some edge is reversed.
    std::optional<std::int64_t> value() const;

    /// Order under the weights both sides were built with.
    friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);
    friend bool operator==(const Cost& a, const Cost& b) { return (a <=> b) == 0; }

private:
    std::int64_t length_ = 0;
    std::int64_t reversed_ = 0;
    std::int64_t w_len_ = 1;
    std::int64_t w_rev_ = 0;
    bool infinite_ = false;
};

struct GlpSolution {
    Layering layering;
    std::vector<EdgeId> reversed;  // ascending edge ids with L(source) > L(target)
    Cost cost;
};

struct MetricsReport {
    std::int64_t reversed_count = 0;
    std::int64_t edge_length_sum = 0;
    std::int64_t dummy_count = 0;
    std::int64_t layer_count = 0;
    std::int64_t max_layer_width = 0;
    std::int64_t est_area = 0;

    double est_aspect_ratio() const {
        return layer_count == 0 ? 0.0 : static_cast<double>(max_layer_width) / static_cast<double>(layer_count);
    }
    double est_area_per_node(NodeId n) const {
        return n == 0 ? 0.0 : static_cast<double>(est_area) / static_cast<double>(n);
    }
};

class InfeasibleLayering : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every edge joins two different layers.
bool is_feasible(const Graph& g, const Layering& L);
/// Every edge strictly increases the layer index.
bool is_valid(const Graph& g, const Layering& L);

/// Scores a feasible layering; throws InfeasibleLayering otherwise.
GlpSolution objective(const Graph& g, const Layering& L, const GlpWeights& w);

struct AcyclicResult {
    Graph graph;                 // same nodes; reversed edges flipped and parallels merged
    std::vector<EdgeId> flipped; // ids in the input graph
};

/// Flips every edge pointing against L. The result is acyclic and L is
/// valid for it.
AcyclicResult deduce_acyclic(const Graph& g, const Layering& L);

/// Layout estimates from a layering: dummies per spanned layer, layer
/// widths including dummies. Edge weights are ignored here.
MetricsReport metrics(const Graph& g, const Layering& L);

/// Places peeled leaves back next to their neighbors (forward, length 1),
/// replaying the record in reverse. core_layering is indexed by core ids.
Layering reattach_leaves(const Layering& core_layering, const PeelRecord& record);

}  // namespace layerforge
