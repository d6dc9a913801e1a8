#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "layerforge/graph.hpp"

namespace layerforge {

struct GeneratorConfig {
    int min_nodes = 17;
    int max_nodes = 60;
    double edge_factor = 1.5;
    int count = 1;
    std::uint64_t seed = 0;
    /// Orient every edge along a random node ranking, so the result is a DAG.
    bool acyclic = false;

    /// Throws std::invalid_argument when min_nodes < 1, max < min,
    /// edge_factor <= 0 or count < 0.
    void validate() const;
};

/// Random graphs: n uniform in [min, max], round(edge_factor*n) edges with
/// uniformly drawn sources, targets uniform over the other nodes (resampled
/// on duplicates, at most n tries). Isolated nodes are removed, nodes are
/// relabeled 0..n'-1 and edges sorted by (source, target). Graph i depends
/// only on (seed, i). Graphs left without nodes are dropped.
std::vector<Graph> generate(const GeneratorConfig& config);

/// Graph i of the corpus `generate` would produce, or an empty graph.
Graph generate_one(const GeneratorConfig& config, std::uint64_t index);

enum class GraphFormat { kDot, kEdgelist };

class ParseError : public std::runtime_error {
public:
    /// what() reads "[file:]line:column: message".
    ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& file = {});
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// DOT subset: `[strict] (digraph|graph) [ID] { ... }` with node and edge
/// statements, quoted or bare ids, attributes ignored, `--` oriented
/// left to right. Edgelist: `u v [weight]` per line, `#` comments, a lone
/// `u` declares a node. The result is normalized; `report` receives what
/// normalization removed.
Graph read_graph(std::string_view text, GraphFormat format, NormalizeReport* report = nullptr);

/// Canonical text: nodes in id order, then edges sorted by (source, target).
std::string write_graph(const Graph& g, GraphFormat format);

/// .dot / .gv select DOT, anything else edgelist.
GraphFormat format_for_path(std::string_view path);

struct NamedGraph {
    std::string id;
    Graph graph;
};

/// Graph files (.dot, .gv, .txt, .el, .edges, .edgelist) directly inside
/// `dir`, sorted by file name; the id is the file stem. Throws
/// std::runtime_error on I/O failure and ParseError (prefixed with the
/// file name) on bad input.
std::vector<NamedGraph> load_corpus_dir(const std::string& dir);

/// Writes `<id>.dot` or `<id>.txt` per graph, creating `dir` if needed.
void write_corpus_dir(const std::vector<NamedGraph>& graphs, const std::string& dir, GraphFormat format);

std::string read_text_file(const std::string& path);

/// Connected, and as an undirected graph has exactly n-1 distinct pairs.
bool is_tree_or_path(const Graph& g);

/// Keeps graphs with at least min_nodes nodes that are not trees or paths.
std::vector<Graph> filter_tall(const std::vector<Graph>& graphs, int min_nodes = 20);

}  // namespace layerforge
