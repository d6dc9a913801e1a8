#include "layerforge/layering.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace layerforge {

namespace {

constexpr Layer kUnset = std::numeric_limits<Layer>::min();

void require_covers(const Graph& g, const Layering& L) {
    if (L.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("layering has " + std::to_string(L.size()) + " entries for a graph with " +
                                    std::to_string(g.node_count()) + " nodes");
}

}  // namespace

Layer Layering::min_layer() const {
    return layers_.empty() ? 0 : *std::min_element(layers_.begin(), layers_.end());
}

Layer Layering::max_layer() const {
    return layers_.empty() ? 0 : *std::max_element(layers_.begin(), layers_.end());
}

int Layering::layer_count() const {
    std::vector<Layer> sorted = layers_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Layering Layering::shifted(Layer delta) const {
    std::vector<Layer> out = layers_;
    for (Layer& l : out) l += delta;
    return Layering(std::move(out));
}

Layering Layering::canonical() const {
    std::vector<Layer> distinct = layers_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Layer> out(layers_.size());
    for (std::size_t i = 0; i < layers_.size(); ++i)
        out[i] = static_cast<Layer>(std::lower_bound(distinct.begin(), distinct.end(), layers_[i]) - distinct.begin()) + 1;
    return Layering(std::move(out));
}

bool Layering::is_canonical() const { return *this == canonical(); }

void GlpWeights::validate(const Graph& g) const {
    if (len < 1) throw std::invalid_argument("w_len must be at least 1");
    if (!rev_infinite && rev < 1) throw std::invalid_argument("w_rev must be at least 1 or infinite");
    if (max_layers && (*max_layers < 1 || *max_layers > std::max<NodeId>(1, g.node_count())))
        throw std::invalid_argument("max_layers must lie in [1, n]");
}

GlpWeights GlpWeights::finite_surrogate(const Graph& g) const {
    if (!rev_infinite) return *this;
    GlpWeights w = *this;
    const std::int64_t span = std::max<std::int64_t>(1, g.node_count() - 1);
    w.rev = 1 + len * span * std::max<std::int64_t>(1, g.total_weight());
    w.rev_infinite = false;
    return w;
}

Cost::Cost(std::int64_t length, std::int64_t reversed, const GlpWeights& w)
    : length_(length), reversed_(reversed), w_len_(w.len), w_rev_(w.rev), infinite_(w.rev_infinite) {}

std::optional<std::int64_t> Cost::value() const {
    if (infinite_) {
        if (reversed_ > 0) return std::nullopt;
        return w_len_ * length_;
    }
    return w_len_ * length_ + w_rev_ * reversed_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) {
        if (auto c = a.reversed_ <=> b.reversed_; c != 0) return c;
        return a.length_ <=> b.length_;
    }
    return *a.value() <=> *b.value();
}

bool is_feasible(const Graph& g, const Layering& L) {
    require_covers(g, L);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return L[e.source] != L[e.target]; });
}

bool is_valid(const Graph& g, const Layering& L) {
    require_covers(g, L);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return L[e.target] - L[e.source] >= 1; });
}

GlpSolution objective(const Graph& g, const Layering& L, const GlpWeights& w) {
    if (!is_feasible(g, L)) throw InfeasibleLayering("layering places both endpoints of an edge on one layer");
    std::int64_t length = 0;
    std::int64_t reversed = 0;
    GlpSolution sol;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const std::int64_t diff = static_cast<std::int64_t>(L[ed.target]) - L[ed.source];
        length += ed.weight * (diff < 0 ? -diff : diff);
        if (diff < 0) {
            reversed += ed.weight;
            sol.reversed.push_back(e);
        }
    }
    sol.layering = L;
    sol.cost = Cost(length, reversed, w);
    return sol;
}

AcyclicResult deduce_acyclic(const Graph& g, const Layering& L) {
    if (!is_feasible(g, L)) throw InfeasibleLayering("cannot orient a flat edge");
    Graph flipped;
    for (NodeId v = 0; v < g.node_count(); ++v) flipped.add_node(g.label(v));
    AcyclicResult result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (L[ed.source] > L[ed.target]) {
            flipped.add_edge(ed.target, ed.source, ed.weight);
            result.flipped.push_back(e);
        } else {
            flipped.add_edge(ed.source, ed.target, ed.weight);
        }
    }
    result.graph = normalize(flipped).graph;
    return result;
}

MetricsReport metrics(const Graph& g, const Layering& L) {
    if (!is_feasible(g, L)) throw InfeasibleLayering("metrics need a feasible layering");
    MetricsReport m;
    if (L.empty()) return m;
    const Layer lo = L.min_layer();
    const Layer hi = L.max_layer();
    const auto span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::int64_t> width(span + 1, 0);  // difference array for dummies, then widths
    std::vector<std::int64_t> real(span, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) ++real[static_cast<std::size_t>(L[v] - lo)];
    for (const Edge& e : g.edges()) {
        const Layer a = std::min(L[e.source], L[e.target]);
        const Layer b = std::max(L[e.source], L[e.target]);
        m.edge_length_sum += b - a;
        if (L[e.source] > L[e.target]) ++m.reversed_count;
        if (b - a >= 2) {
            ++width[static_cast<std::size_t>(a + 1 - lo)];
            --width[static_cast<std::size_t>(b - lo)];
        }
    }
    m.dummy_count = m.edge_length_sum - g.edge_count();
    std::int64_t running = 0;
    for (std::size_t i = 0; i < span; ++i) {
        running += width[i];
        m.max_layer_width = std::max(m.max_layer_width, running + real[i]);
    }
    m.layer_count = static_cast<std::int64_t>(span);
    m.est_area = m.layer_count * m.max_layer_width;
    return m;
}

Layering reattach_leaves(const Layering& core_layering, const PeelRecord& record) {
    if (core_layering.size() != record.core_to_original.size())
        throw std::invalid_argument("core layering does not match the peel record");
    std::vector<Layer> full(static_cast<std::size_t>(record.original_node_count), kUnset);
    for (std::size_t i = 0; i < record.core_to_original.size(); ++i)
        full[static_cast<std::size_t>(record.core_to_original[i])] = core_layering[static_cast<NodeId>(i)];
    for (auto it = record.steps.rbegin(); it != record.steps.rend(); ++it) {
        Layer& slot = full.at(static_cast<std::size_t>(it->leaf));
        if (it->direction == LeafEdge::kNone) {
            slot = 0;
            continue;
        }
        const Layer anchor = full.at(static_cast<std::size_t>(it->neighbor));
        if (anchor == kUnset) throw std::invalid_argument("peel record references an unplaced neighbor");
        slot = it->direction == LeafEdge::kTowardLeaf ? anchor + 1 : anchor - 1;
    }
    if (std::find(full.begin(), full.end(), kUnset) != full.end())
        throw std::invalid_argument("peel record leaves nodes unplaced");
    return Layering(std::move(full));
}

}  // namespace layerforge
