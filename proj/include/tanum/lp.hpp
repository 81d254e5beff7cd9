#pragma once

#include "tanum/dag.hpp"
#include "tanum/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tanum {

// One constraint, coeffs . x >= rhs. All rows of a program share the width.
struct LinearRow {
    RationalVector coeffs;
    Rational rhs;
};

struct LinearProgram {
    RationalVector objective;  // minimized
    std::vector<LinearRow> rows;
    std::vector<std::string> var_names;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status;
    RationalVector x;  // empty unless Optimal
    Rational value;    // objective at x
};

// Variables f(1..n) then k. One row per arc (u,v): +1 on N(v)\N(u), -1 on
// N(u)\N(v), rhs 1. Then k - f(v) >= 0 and f(v) >= 1 per vertex. Minimize k.
LinearProgram build_lr(const Dag& d);

// Two-phase primal simplex, Bland's rule, exact rational arithmetic. Free
// variables are split internally. Throws std::invalid_argument on a malformed
// program (row width mismatch).
LpSolution simplex_solve(const LinearProgram& lp);

struct Membership {
    Labeling witness;     // scale_to_integer of the optimal f part
    Rational lr_optimum;  // exact optimal k of the relaxation
    long long k_ub;       // max label of the witness
};

// nullopt iff the relaxation is infeasible, i.e. the digraph admits no
// topological additive numbering at all. Otherwise the scaled witness is a
// valid numbering (asserted internally).
std::optional<Membership> membership(const Dag& d);

// Multiplies by the LCM of denominators. Entries must be >= 1
// (std::invalid_argument otherwise); result entries must fit in long long
// (std::overflow_error otherwise).
Labeling scale_to_integer(const RationalVector& x);

}  // namespace tanum
