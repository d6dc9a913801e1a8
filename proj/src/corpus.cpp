#include "layerforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "random.hpp"

namespace layerforge {

void GeneratorConfig::validate() const {
    if (min_nodes < 1) throw std::invalid_argument("min_nodes must be at least 1");
    if (max_nodes < min_nodes) throw std::invalid_argument("max_nodes must be at least min_nodes");
    if (!(edge_factor > 0)) throw std::invalid_argument("edge_factor must be positive");
    if (count < 0) throw std::invalid_argument("count must be non-negative");
}

Graph generate_one(const GeneratorConfig& config, std::uint64_t index) {
    config.validate();
    auto rng = detail::make_stream(config.seed, index);
    const auto span = static_cast<std::uint64_t>(config.max_nodes - config.min_nodes + 1);
    const auto n = static_cast<NodeId>(config.min_nodes + static_cast<int>(detail::uniform_below(rng, span)));
    const auto m = static_cast<std::int64_t>(std::llround(config.edge_factor * n));

    std::vector<NodeId> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    if (config.acyclic)
        for (std::size_t i = rank.size(); i > 1; --i)
            std::swap(rank[i - 1], rank[detail::uniform_below(rng, i)]);

    std::set<std::pair<NodeId, NodeId>> edges;
    for (std::int64_t k = 0; k < m && n > 1; ++k) {
        const auto s = static_cast<NodeId>(detail::uniform_below(rng, static_cast<std::uint64_t>(n)));
        for (NodeId attempt = 0; attempt < n; ++attempt) {
            auto t = static_cast<NodeId>(detail::uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
            if (t >= s) ++t;
            std::pair<NodeId, NodeId> e{s, t};
            if (config.acyclic && rank[static_cast<std::size_t>(s)] > rank[static_cast<std::size_t>(t)])
                e = {t, s};
            if (edges.insert(e).second) break;
        }
    }

    std::vector<NodeId> new_id(static_cast<std::size_t>(n), kNoNode);
    for (const auto& [s, t] : edges) new_id[static_cast<std::size_t>(s)] = new_id[static_cast<std::size_t>(t)] = 0;
    Graph g;
    for (NodeId v = 0; v < n; ++v)
        if (new_id[static_cast<std::size_t>(v)] != kNoNode) new_id[static_cast<std::size_t>(v)] = g.add_node();
    std::vector<std::pair<NodeId, NodeId>> mapped;
    for (const auto& [s, t] : edges) mapped.emplace_back(new_id[static_cast<std::size_t>(s)], new_id[static_cast<std::size_t>(t)]);
    std::sort(mapped.begin(), mapped.end());
    for (const auto& [s, t] : mapped) g.add_edge(s, t);
    return g;
}

std::vector<Graph> generate(const GeneratorConfig& config) {
    config.validate();
    std::vector<Graph> out;
    for (int i = 0; i < config.count; ++i) {
        Graph g = generate_one(config, static_cast<std::uint64_t>(i));
        if (!g.empty()) out.push_back(std::move(g));
    }
    return out;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& file)
    : std::runtime_error((file.empty() ? "" : file + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

class GraphBuilder {
public:
    NodeId node(const std::string& label) {
        auto [it, inserted] = ids_.emplace(label, 0);
        if (inserted) it->second = graph.add_node(label);
        return it->second;
    }

    Graph graph;

private:
    std::map<std::string, NodeId> ids_;
};

// --- DOT ------------------------------------------------------------------

enum class Tok { kId, kLBrace, kRBrace, kLBracket, kRBracket, kSemi, kComma, kEq, kArrow, kDash, kColon, kEnd };

struct DotToken {
    Tok kind;
    std::string text;
    bool quoted = false;
    std::size_t line;
    std::size_t column;
};

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    DotToken next() {
        skip_blank();
        const std::size_t line = line_, column = column_;
        if (pos_ >= text_.size()) return {Tok::kEnd, "", false, line, column};
        const char c = text_[pos_];
        auto single = [&](Tok k) {
            advance();
            return DotToken{k, std::string(1, c), false, line, column};
        };
        switch (c) {
            case '{': return single(Tok::kLBrace);
            case '}': return single(Tok::kRBrace);
            case '[': return single(Tok::kLBracket);
            case ']': return single(Tok::kRBracket);
            case ';': return single(Tok::kSemi);
            case ',': return single(Tok::kComma);
            case '=': return single(Tok::kEq);
            case ':': return single(Tok::kColon);
            default: break;
        }
        if (c == '-' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
            const Tok k = text_[pos_ + 1] == '>' ? Tok::kArrow : Tok::kDash;
            advance();
            advance();
            return {k, k == Tok::kArrow ? "->" : "--", false, line, column};
        }
        if (c == '"') {
            advance();
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                    const char esc = text_[pos_ + 1];
                    if (esc == '"') {
                        value += '"';
                    } else if (esc == '\n') {
                        // line continuation
                    } else {
                        value += '\\';
                        value += esc;
                    }
                    advance();
                    advance();
                    continue;
                }
                value += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column);
            advance();
            return {Tok::kId, value, true, line, column};
        }
        if (c == '<') {
            int depth = 0;
            std::string value;
            do {
                if (text_[pos_] == '<') ++depth;
                if (text_[pos_] == '>') --depth;
                value += text_[pos_];
                advance();
            } while (pos_ < text_.size() && depth > 0);
            if (depth > 0) throw ParseError("unterminated HTML string", line, column);
            return {Tok::kId, value, true, line, column};
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
            static_cast<unsigned char>(c) >= 0x80) {
            std::string value;
            while (pos_ < text_.size()) {
                const auto d = static_cast<unsigned char>(text_[pos_]);
                if (!(std::isalnum(d) || d == '_' || d == '.' || d >= 0x80 || (d == '-' && value.empty()))) break;
                value += text_[pos_];
                advance();
            }
            return {Tok::kId, value, false, line, column};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#' && column_ == 1) {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                const std::size_t line = line_, column = column_;
                advance();
                advance();
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
                if (pos_ + 1 >= text_.size()) throw ParseError("unterminated comment", line, column);
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool keyword(const DotToken& t, std::string_view word) {
    if (t.kind != Tok::kId || t.quoted || t.text.size() != word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(t.text[i])) != word[i]) return false;
    return true;
}

class DotParser {
public:
    explicit DotParser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

    Graph parse() {
        if (keyword(tok_, "strict")) shift();
        if (keyword(tok_, "digraph")) {
            shift();
        } else if (keyword(tok_, "graph")) {
            directed_ = false;
            shift();
        } else {
            fail("expected 'digraph' or 'graph'");
        }
        if (tok_.kind == Tok::kId) shift();
        expect(Tok::kLBrace, "'{'");
        statements();
        expect(Tok::kRBrace, "'}'");
        if (tok_.kind != Tok::kEnd) fail("trailing content after graph");
        return std::move(builder_.graph);
    }

private:
    void statements() {
        while (tok_.kind != Tok::kRBrace && tok_.kind != Tok::kEnd) {
            statement();
            if (tok_.kind == Tok::kSemi || tok_.kind == Tok::kComma) shift();
        }
    }

    void statement() {
        if (keyword(tok_, "subgraph") || tok_.kind == Tok::kLBrace) fail("subgraphs are not supported");
        if (tok_.kind != Tok::kId) fail("expected a statement");
        if (keyword(tok_, "graph") || keyword(tok_, "node") || keyword(tok_, "edge")) {
            shift();
            attributes();
            return;
        }
        DotToken first = tok_;
        shift();
        if (tok_.kind == Tok::kEq) {
            shift();
            if (tok_.kind != Tok::kId) fail("expected a value");
            shift();
            return;
        }
        skip_port();
        NodeId prev = builder_.node(first.text);
        std::vector<std::pair<NodeId, NodeId>> chain;
        while (tok_.kind == Tok::kArrow || tok_.kind == Tok::kDash) {
            if (tok_.kind == Tok::kDash && directed_) fail("'--' in a digraph");
            if (tok_.kind == Tok::kArrow && !directed_) fail("'->' in an undirected graph");
            shift();
            if (keyword(tok_, "subgraph") || tok_.kind == Tok::kLBrace) fail("subgraphs are not supported");
            if (tok_.kind != Tok::kId) fail("expected a node id");
            const NodeId next = builder_.node(tok_.text);
            shift();
            skip_port();
            chain.emplace_back(prev, next);
            prev = next;
        }
        const std::int64_t weight = edge_weight(attributes());
        for (const auto& [u, v] : chain) builder_.graph.add_edge(u, v, weight);
    }

    // Only an integral `weight` is honoured; every other attribute is ignored.
    std::int64_t edge_weight(const std::vector<std::pair<DotToken, DotToken>>& attrs) {
        std::int64_t weight = 1;
        for (const auto& [key, value] : attrs) {
            if (key.text != "weight") continue;
            std::int64_t w = 0;
            auto [p, ec] = std::from_chars(value.text.data(), value.text.data() + value.text.size(), w);
            if (ec == std::errc() && p == value.text.data() + value.text.size() && w >= 1) weight = w;
        }
        return weight;
    }

    void skip_port() {
        while (tok_.kind == Tok::kColon) {
            shift();
            if (tok_.kind != Tok::kId) fail("expected a port name");
            shift();
        }
    }

    std::vector<std::pair<DotToken, DotToken>> attributes() {
        std::vector<std::pair<DotToken, DotToken>> out;
        while (tok_.kind == Tok::kLBracket) {
            shift();
            while (tok_.kind != Tok::kRBracket) {
                if (tok_.kind != Tok::kId) fail("expected an attribute name");
                DotToken key = tok_;
                shift();
                if (tok_.kind == Tok::kEq) {
                    shift();
                    if (tok_.kind != Tok::kId) fail("expected an attribute value");
                    out.emplace_back(key, tok_);
                    shift();
                }
                if (tok_.kind == Tok::kComma || tok_.kind == Tok::kSemi) shift();
            }
            shift();
        }
        return out;
    }

    void shift() { tok_ = lex_.next(); }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + (tok_.kind == Tok::kEnd ? " at end of input" : ", got '" + tok_.text + "'"), tok_.line,
                         tok_.column);
    }

    DotLexer lex_;
    DotToken tok_;
    GraphBuilder builder_;
    bool directed_ = true;
};

// --- edgelist -------------------------------------------------------------

struct Field {
    std::string text;
    std::size_t column;
};

std::vector<Field> split_fields(std::string_view line, std::size_t line_no) {
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const std::size_t start = i++;
            std::string value;
            while (i < line.size() && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < line.size()) ++i;
                value += line[i++];
            }
            if (i >= line.size()) throw ParseError("unterminated string", line_no, start + 1);
            ++i;
            out.push_back({value, start + 1});
        } else {
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
            out.push_back({std::string(line.substr(start, i - start)), start + 1});
        }
    }
    return out;
}

Graph parse_edgelist(std::string_view text) {
    GraphBuilder builder;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;
        ++line_no;
        const auto fields = split_fields(line, line_no);
        if (fields.empty()) continue;
        if (fields.size() > 3) throw ParseError("expected 'u v [weight]'", line_no, fields[3].column);
        const NodeId u = builder.node(fields[0].text);
        if (fields.size() == 1) continue;
        const NodeId v = builder.node(fields[1].text);
        std::int64_t weight = 1;
        if (fields.size() == 3) {
            const std::string& w = fields[2].text;
            auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
            if (ec != std::errc() || p != w.data() + w.size() || weight < 1)
                throw ParseError("weight must be a positive integer", line_no, fields[2].column);
        }
        builder.graph.add_edge(u, v, weight);
    }
    return std::move(builder.graph);
}

bool bare_dot_id(const std::string& s) {
    if (s.empty()) return false;
    const bool numeral = std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    const bool ident = !std::isdigit(static_cast<unsigned char>(s[0])) &&
                       std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
    static const std::set<std::string> reserved{"node", "edge", "graph", "digraph", "subgraph", "strict"};
    std::string lower = s;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return (numeral || ident) && !reserved.count(lower);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

std::string dot_id(const std::string& s) { return bare_dot_id(s) ? s : quoted(s); }

std::string edgelist_id(const std::string& s) {
    const bool plain = !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) || c == '#' || c == '"';
    });
    return plain ? s : quoted(s);
}

}  // namespace

Graph read_graph(std::string_view text, GraphFormat format, NormalizeReport* report) {
    Graph raw = format == GraphFormat::kDot ? DotParser(text).parse() : parse_edgelist(text);
    NormalizeResult r = normalize(raw);
    if (report) *report = std::move(r.report);
    return std::move(r.graph);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return std::pair(g.edge(a).source, g.edge(a).target) < std::pair(g.edge(b).source, g.edge(b).target);
    });
    std::ostringstream out;
    if (format == GraphFormat::kDot) {
        out << "digraph g {\n";
        for (NodeId v = 0; v < g.node_count(); ++v) out << "  " << dot_id(g.label(v)) << ";\n";
        for (EdgeId e : order) {
            const Edge& ed = g.edge(e);
            out << "  " << dot_id(g.label(ed.source)) << " -> " << dot_id(g.label(ed.target));
            if (ed.weight != 1) out << " [weight=" << ed.weight << ']';
            out << ";\n";
        }
        out << "}\n";
    } else {
        for (NodeId v = 0; v < g.node_count(); ++v) out << edgelist_id(g.label(v)) << '\n';
        for (EdgeId e : order) {
            const Edge& ed = g.edge(e);
            out << edgelist_id(g.label(ed.source)) << ' ' << edgelist_id(g.label(ed.target));
            if (ed.weight != 1) out << ' ' << ed.weight;
            out << '\n';
        }
    }
    return out.str();
}

GraphFormat format_for_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        if (path.size() < suffix.size()) return false;
        for (std::size_t i = 0; i < suffix.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(path[path.size() - suffix.size() + i])) != suffix[i])
                return false;
        return true;
    };
    return ends_with(".dot") || ends_with(".gv") ? GraphFormat::kDot : GraphFormat::kEdgelist;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<NamedGraph> load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    static const std::set<std::string> kExtensions{".dot", ".gv", ".txt", ".el", ".edges", ".edgelist"};
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw std::runtime_error("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && kExtensions.count(entry.path().extension().string()))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<NamedGraph> out;
    for (const fs::path& f : files) {
        try {
            out.push_back({f.stem().string(), read_graph(read_text_file(f.string()), format_for_path(f.string()))});
        } catch (const ParseError& e) {
            throw ParseError(e.message(), e.line(), e.column(), f.filename().string());
        }
    }
    return out;
}

void write_corpus_dir(const std::vector<NamedGraph>& graphs, const std::string& dir, GraphFormat format) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const char* ext = format == GraphFormat::kDot ? ".dot" : ".txt";
    for (const NamedGraph& ng : graphs) {
        const fs::path path = fs::path(dir) / (ng.id + ext);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << write_graph(ng.graph, format);
    }
}

bool is_tree_or_path(const Graph& g) {
    if (g.empty()) return false;
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const Edge& e : g.edges())
        if (e.source != e.target) pairs.emplace(std::min(e.source, e.target), std::max(e.source, e.target));
    return pairs.size() + 1 == static_cast<std::size_t>(g.node_count()) && weak_components(g).count() == 1;
}

std::vector<Graph> filter_tall(const std::vector<Graph>& graphs, int min_nodes) {
    std::vector<Graph> out;
    for (const Graph& g : graphs)
        if (g.node_count() >= min_nodes && !is_tree_or_path(g)) out.push_back(g);
    return out;
}

}  // namespace layerforge
