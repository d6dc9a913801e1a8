#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "layerforge/graph.hpp"
#include "layerforge/layering.hpp"

namespace layerforge {

enum class VarKind { kContinuous, kGeneral, kBinary };

struct Variable {
    std::string name;
    VarKind kind = VarKind::kContinuous;
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;  // nullopt = unbounded

    friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
    std::size_t var;
    std::int64_t coef;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::kGreaterEqual;
    std::int64_t rhs = 0;
};

/// Linear integer model of the layering problem:
///   l_v  in [1, b]           layer of node v
///   r_u_v binary             edge (u,v) points upward
///   d_u_v >= 0               |l_u - l_v|
/// minimizing sum w_len*w_e*d_e + w_rev*w_e*r_e.
struct IpModel {
    std::vector<Variable> variables;
    std::vector<Term> objective;
    std::vector<Constraint> constraints;

    std::optional<std::size_t> find(std::string_view name) const;
};

/// Per edge (u,v), with M = n:
///   d - l_v + l_u >= 0,   d + l_v - l_u >= 0,   d >= 1,
///   M r + l_v - l_u >= 1          (upward only if r = 1)
///   l_u - l_v - M r >= 1 - M      (downward only if r = 0)
/// Throws std::invalid_argument for an infinite reversal weight; map it
/// through GlpWeights::finite_surrogate first.
IpModel build_model(const Graph& g, const GlpWeights& w);

/// CPLEX LP text (Minimize / Subject To / Bounds / Generals / Binaries / End).
std::string export_lp(const IpModel& model);

class LpParseError : public std::runtime_error {
public:
    LpParseError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the LP subset export_lp writes.
IpModel parse_lp(std::string_view text);

/// Same variables, objective and constraints, matched by name.
bool structurally_equal(const IpModel& a, const IpModel& b);

}  // namespace layerforge
