#include "layerforge/ip_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace layerforge {

namespace {

bool plain_name(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// Per-node name fragments: labels when they yield unique LP identifiers,
// otherwise v<id> for every node.
std::vector<std::string> node_tokens(const Graph& g) {
    std::vector<std::string> tokens = g.labels();
    bool ok = std::all_of(tokens.begin(), tokens.end(), plain_name);
    if (ok) {
        std::set<std::string> seen;
        for (const std::string& t : tokens) ok = ok && seen.insert(t).second;
        for (const Edge& e : g.edges())
            ok = ok && seen.insert(tokens[static_cast<std::size_t>(e.source)] + "_" +
                                   tokens[static_cast<std::size_t>(e.target)])
                           .second;
    }
    if (!ok)
        for (NodeId v = 0; v < g.node_count(); ++v) tokens[static_cast<std::size_t>(v)] = "v" + std::to_string(v);
    return tokens;
}

void write_term(std::ostream& out, std::int64_t coef, const std::string& name, bool first) {
    if (coef < 0)
        out << (first ? "- " : " - ");
    else if (!first)
        out << " + ";
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1) out << mag << ' ';
    out << name;
}

void write_expression(std::ostream& out, const IpModel& m, const std::vector<Term>& terms, std::size_t per_line) {
    if (terms.empty()) {
        out << '0';
        return;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0 && i % per_line == 0) out << "\n  ";
        write_term(out, terms[i].coef, m.variables[terms[i].var].name, i == 0);
    }
}

const char* sense_text(Sense s) {
    switch (s) {
        case Sense::kLessEqual: return "<=";
        case Sense::kGreaterEqual: return ">=";
        case Sense::kEqual: return "=";
    }
    return "?";
}

}  // namespace

std::optional<std::size_t> IpModel::find(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name) return i;
    return std::nullopt;
}

IpModel build_model(const Graph& g, const GlpWeights& w) {
    if (w.rev_infinite) throw std::invalid_argument("the IP model needs a finite reversal weight");
    w.validate(g);
    const NodeId n = g.node_count();
    const std::int64_t big_m = n;
    const std::int64_t top = w.max_layers ? *w.max_layers : std::max<NodeId>(n, 1);
    const auto tokens = node_tokens(g);

    IpModel m;
    std::vector<std::size_t> layer_var;
    for (NodeId v = 0; v < n; ++v) {
        layer_var.push_back(m.variables.size());
        m.variables.push_back({"l_" + tokens[static_cast<std::size_t>(v)], VarKind::kGeneral, 1, top});
    }
    for (const Edge& e : g.edges()) {
        const std::string key = tokens[static_cast<std::size_t>(e.source)] + "_" + tokens[static_cast<std::size_t>(e.target)];
        const std::size_t d = m.variables.size();
        m.variables.push_back({"d_" + key, VarKind::kGeneral, 0, std::nullopt});
        const std::size_t r = m.variables.size();
        m.variables.push_back({"r_" + key, VarKind::kBinary, 0, 1});
        const std::size_t lu = layer_var[static_cast<std::size_t>(e.source)];
        const std::size_t lv = layer_var[static_cast<std::size_t>(e.target)];

        m.objective.push_back({d, w.len * e.weight});
        m.objective.push_back({r, w.rev * e.weight});

        m.constraints.push_back({"lo_" + key, {{d, 1}, {lv, -1}, {lu, 1}}, Sense::kGreaterEqual, 0});
        m.constraints.push_back({"hi_" + key, {{d, 1}, {lv, 1}, {lu, -1}}, Sense::kGreaterEqual, 0});
        m.constraints.push_back({"feas_" + key, {{d, 1}}, Sense::kGreaterEqual, 1});
        m.constraints.push_back({"up_" + key, {{r, big_m}, {lv, 1}, {lu, -1}}, Sense::kGreaterEqual, 1});
        m.constraints.push_back({"down_" + key, {{lu, 1}, {lv, -1}, {r, -big_m}}, Sense::kGreaterEqual, 1 - big_m});
    }
    return m;
}

std::string export_lp(const IpModel& m) {
    std::ostringstream out;
    out << "\\ layered graph model: " << m.variables.size() << " variables, " << m.constraints.size()
        << " constraints\n";
    out << "Minimize\n obj: ";
    write_expression(out, m, m.objective, 8);
    out << "\nSubject To\n";
    for (const Constraint& c : m.constraints) {
        out << ' ' << c.name << ": ";
        write_expression(out, m, c.terms, 8);
        out << ' ' << sense_text(c.sense) << ' ' << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (const Variable& v : m.variables) {
        if (v.kind == VarKind::kBinary) continue;
        if (v.upper)
            out << ' ' << v.lower << " <= " << v.name << " <= " << *v.upper << '\n';
        else if (v.lower != 0)
            out << ' ' << v.name << " >= " << v.lower << '\n';
    }
    auto list = [&](const char* header, VarKind kind) {
        std::vector<const std::string*> names;
        for (const Variable& v : m.variables)
            if (v.kind == kind) names.push_back(&v.name);
        if (names.empty()) return;
        out << header << '\n';
        for (std::size_t i = 0; i < names.size(); ++i) out << (i % 8 == 0 ? (i ? "\n " : " ") : " ") << *names[i];
        out << '\n';
    };
    list("Generals", VarKind::kGeneral);
    list("Binaries", VarKind::kBinary);
    out << "End\n";
    return out.str();
}

namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kGenerals, kBinaries, kEnd };

struct Token {
    std::string text;
    std::size_t line;
};

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<Section> section_header(std::string_view line) {
    const std::string l = lower(trim(line));
    if (l == "minimize" || l == "minimise" || l == "min") return Section::kObjective;
    if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") return Section::kConstraints;
    if (l == "bounds" || l == "bound") return Section::kBounds;
    if (l == "generals" || l == "general" || l == "gen") return Section::kGenerals;
    if (l == "binaries" || l == "binary" || l == "bin") return Section::kBinaries;
    if (l == "end") return Section::kEnd;
    return std::nullopt;
}

void tokenize(std::string_view line, std::size_t line_no, std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '<' || c == '>' || c == '=') {
            std::size_t j = i + 1;
            if (j < line.size() && line[j] == '=') ++j;
            std::string op(line.substr(i, j - i));
            if (op == "=<") op = "<=";
            if (op == "=>") op = ">=";
            out.push_back({op, line_no});
            i = j;
        } else if (c == '+' || c == '-' || c == ':') {
            out.push_back({std::string(1, c), line_no});
            ++i;
        } else {
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
                   std::string_view("<>=+-:").find(line[j]) == std::string_view::npos)
                ++j;
            out.push_back({std::string(line.substr(i, j - i)), line_no});
            i = j;
        }
    }
}

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t to_int(const Token& t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw LpParseError("expected an integer, got '" + t.text + "'", t.line);
    return v;
}

class LpReader {
public:
    IpModel model;

    std::size_t var(const std::string& name) {
        auto [it, inserted] = index_.emplace(name, model.variables.size());
        if (inserted) model.variables.push_back({name, VarKind::kContinuous, 0, std::nullopt});
        return it->second;
    }

    // [name :] expr [sense rhs]; stops at the sense token or end of tokens.
    std::vector<Term> expression(const std::vector<Token>& toks, std::size_t& i) {
        std::vector<Term> terms;
        while (i < toks.size() && toks[i].text != "<=" && toks[i].text != ">=" && toks[i].text != "=") {
            std::int64_t sign = 1;
            while (i < toks.size() && (toks[i].text == "+" || toks[i].text == "-")) {
                if (toks[i].text == "-") sign = -sign;
                ++i;
            }
            if (i >= toks.size()) throw LpParseError("dangling sign", toks.back().line);
            std::int64_t coef = 1;
            if (is_number(toks[i].text)) {
                coef = to_int(toks[i]);
                ++i;
                if (i >= toks.size() || toks[i].text == "+" || toks[i].text == "-" || toks[i].text == "<=" ||
                    toks[i].text == ">=" || toks[i].text == "=") {
                    if (coef != 0) throw LpParseError("constant terms are not supported", toks[i - 1].line);
                    continue;
                }
            }
            terms.push_back({var(toks[i].text), sign * coef});
            ++i;
        }
        return terms;
    }

    void objective(const std::vector<Token>& toks) {
        std::size_t i = 0;
        if (toks.size() >= 2 && toks[1].text == ":") i = 2;
        model.objective = expression(toks, i);
        if (i != toks.size()) throw LpParseError("unexpected relation in objective", toks[i].line);
    }

    void constraints(const std::vector<Token>& toks) {
        std::size_t i = 0;
        while (i < toks.size()) {
            Constraint c;
            if (i + 1 < toks.size() && toks[i + 1].text == ":") {
                c.name = toks[i].text;
                i += 2;
            } else {
                c.name = "c" + std::to_string(model.constraints.size() + 1);
            }
            c.terms = expression(toks, i);
            if (i >= toks.size()) throw LpParseError("constraint without relation", toks.back().line);
            const std::string& op = toks[i].text;
            c.sense = op == "<=" ? Sense::kLessEqual : op == ">=" ? Sense::kGreaterEqual : Sense::kEqual;
            ++i;
            std::int64_t sign = 1;
            while (i < toks.size() && (toks[i].text == "+" || toks[i].text == "-")) {
                if (toks[i].text == "-") sign = -sign;
                ++i;
            }
            if (i >= toks.size()) throw LpParseError("missing right-hand side", toks.back().line);
            c.rhs = sign * to_int(toks[i]);
            ++i;
            model.constraints.push_back(std::move(c));
        }
    }

    void bound_line(const std::vector<Token>& toks) {
        // lo <= x <= hi  |  x >= lo  |  x <= hi
        auto signed_int = [&](std::size_t& i) {
            std::int64_t sign = 1;
            if (i < toks.size() && toks[i].text == "-") {
                sign = -1;
                ++i;
            }
            if (i >= toks.size()) throw LpParseError("incomplete bound", toks.back().line);
            return sign * to_int(toks[i++]);
        };
        std::size_t i = 0;
        if (toks.empty()) return;
        if (is_number(toks[0].text) || toks[0].text == "-") {
            const std::int64_t lo = signed_int(i);
            if (i + 3 > toks.size() || toks[i].text != "<=") throw LpParseError("malformed bound", toks[0].line);
            Variable& v = model.variables[var(toks[i + 1].text)];
            v.lower = lo;
            i += 2;
            if (i < toks.size()) {
                if (toks[i].text != "<=") throw LpParseError("malformed bound", toks[i].line);
                ++i;
                v.upper = signed_int(i);
            }
        } else {
            Variable& v = model.variables[var(toks[0].text)];
            if (toks.size() < 3) throw LpParseError("malformed bound", toks[0].line);
            i = 2;
            if (toks[1].text == ">=")
                v.lower = signed_int(i);
            else if (toks[1].text == "<=")
                v.upper = signed_int(i);
            else
                throw LpParseError("malformed bound", toks[0].line);
        }
    }

private:
    std::map<std::string, std::size_t> index_;
};

}  // namespace

IpModel parse_lp(std::string_view text) {
    LpReader reader;
    Section section = Section::kNone;
    std::vector<Token> objective, constraints;
    std::vector<std::vector<Token>> bounds;
    std::vector<Token> generals, binaries;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && section != Section::kEnd) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto c = line.find('\\'); c != std::string_view::npos) line = line.substr(0, c);
        if (trim(line).empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (auto s = section_header(line)) {
            section = *s;
            continue;
        }
        switch (section) {
            case Section::kObjective: tokenize(line, line_no, objective); break;
            case Section::kConstraints: tokenize(line, line_no, constraints); break;
            case Section::kBounds:
                bounds.emplace_back();
                tokenize(line, line_no, bounds.back());
                break;
            case Section::kGenerals: tokenize(line, line_no, generals); break;
            case Section::kBinaries: tokenize(line, line_no, binaries); break;
            case Section::kNone: throw LpParseError("content before the objective section", line_no);
            case Section::kEnd: break;
        }
        if (eol == text.size()) break;
    }
    if (section != Section::kEnd) throw LpParseError("missing End", line_no);

    reader.objective(objective);
    reader.constraints(constraints);
    for (const auto& b : bounds) reader.bound_line(b);
    for (const Token& t : generals) reader.model.variables[reader.var(t.text)].kind = VarKind::kGeneral;
    for (const Token& t : binaries) {
        Variable& v = reader.model.variables[reader.var(t.text)];
        v.kind = VarKind::kBinary;
        v.lower = 0;
        v.upper = 1;
    }
    return std::move(reader.model);
}

bool structurally_equal(const IpModel& a, const IpModel& b) {
    auto vars = [](const IpModel& m) {
        std::map<std::string, Variable> out;
        for (const Variable& v : m.variables) out[v.name] = v;
        return out;
    };
    auto row = [](const IpModel& m, const std::vector<Term>& terms) {
        std::map<std::string, std::int64_t> out;
        for (const Term& t : terms) out[m.variables[t.var].name] += t.coef;
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    auto rows = [&](const IpModel& m) {
        std::map<std::string, std::tuple<Sense, std::int64_t, std::map<std::string, std::int64_t>>> out;
        for (const Constraint& c : m.constraints) out[c.name] = {c.sense, c.rhs, row(m, c.terms)};
        return out;
    };
    return a.constraints.size() == b.constraints.size() && vars(a) == vars(b) &&
           row(a, a.objective) == row(b, b.objective) && rows(a) == rows(b);
}

}  // namespace layerforge
