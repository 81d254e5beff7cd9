#pragma once

#include "tanum/dag.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tanum {

struct CnfFormula {
    int num_vars = 0;
    int num_original_vars = 0;  // variables before normalization appended any
    std::vector<std::array<int, 3>> clauses;  // signed 1-based literals

    bool has_repeated_literal() const;
};

// DIMACS CNF: 'c' comments, one 'p cnf <vars> <clauses>' header, clauses as
// zero-terminated literal lists (line breaks irrelevant). Clauses must have
// exactly 3 literals; repeated literals within a clause are accepted here and
// removed by normalize_clauses. Throws std::runtime_error on bad input.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf(const std::string& text);

// Replaces every clause {y, y, z} by {a, y, z} and {-a, y, z} until no clause
// repeats a literal. Each expansion round introduces one fresh variable,
// shared by all clauses expanded in that round; fresh variables are appended
// after the existing ones. Equisatisfiable with the input.
CnfFormula normalize_clauses(const CnfFormula& phi);

// Vertex ids (0-based) of one variable gadget / one clause gadget.
struct VarGadget {
    int pos = -1, neg = -1;   // the two literal vertices
    std::array<int, 5> x{};   // x1..x5
    std::array<int, 6> u{};   // u1..u6
};
struct ClauseGadget {
    int c = -1;
    std::array<int, 5> cx{};          // c1..c5
    std::array<int, 3> literals{};    // the clause, signed 1-based
};
struct ReductionMap {
    int num_original_vars = 0;
    std::vector<VarGadget> vars;
    std::vector<ClauseGadget> clauses;
};

// The hardness-reduction digraph: per variable the 13-vertex gadget with arcs
// (x1,x),(x1,-x),(x2,x1),(x3,x2),(x4,x2),(x5,x2),(u1..u3,x),(u4..u6,-x); per
// clause c = y|z|w the 6-vertex gadget with arcs (c,y),(c,z),(c,w),(c,c1),
// (c2,c1),(c3,c1),(c4,c1),(c5,c). Vertex layout is fixed: variable gadgets
// first in variable order (x, -x, x1..x5, u1..u6), then clause gadgets in
// clause order (c, c1..c5), so output files are byte-reproducible.
// |V| = 13|X| + 6|C| and |A| = 12|X| + 8|C|. The underlying graph is verified
// bipartite at build time. Requires a normalized, nonempty formula (throws
// std::invalid_argument otherwise).
std::pair<Dag, ReductionMap> build_dphi(const CnfFormula& phi);

// Sidecar text describing the gadget layout: one line per vertex,
// "<vertex-id> <role> <owner>" with 1-based vertex ids, role in
// {x, nx, x1..x5, u1..u6} owned by a variable or {c, c1..c5} owned by a
// clause (both 1-based).
std::string map_to_text(const ReductionMap& map);

// The constructive labeling for a satisfying assignment gamma (total over the
// normalized formula's variables): per variable f(x1)=f(x3..x5)=1,
// f(x2)=f(u*)=2, (f(x),f(-x))=(1,2) if gamma says true else (2,1); per clause
// f(c)=f(c2..c4)=2, f(c1)=f(c5)=1. Throws std::invalid_argument when gamma
// has the wrong size or does not satisfy the formula.
Labeling encode_assignment(const CnfFormula& phi, const std::vector<bool>& gamma,
                           const ReductionMap& map);

// Reads an assignment off a valid 2-numbering: true iff f(x) = 1, with the
// tie f(x) = f(-x) = 2 resolved to true. Returns values for the original
// variables only. Throws std::invalid_argument when f is not a valid
// 2-numbering of d.
std::vector<bool> decode_labeling(const Dag& d, const Labeling& f, const ReductionMap& map);

struct LemmaViolation {
    bool clause_side = false;  // false: a variable pair, true: a clause triple
    int index = -1;            // which variable / clause (0-based)
    long long sum = 0;
};
struct LemmaReport {
    std::vector<LemmaViolation> violations;
    bool ok() const { return violations.empty(); }
};

// For a valid 2-numbering: f(x) + f(-x) >= 3 per variable and
// f(y) + f(z) + f(w) <= 5 per clause. Pure arithmetic on f; the caller
// guarantees validity.
LemmaReport check_lemmas(const Labeling& f, const ReductionMap& map);

}  // namespace tanum
