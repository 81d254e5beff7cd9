#pragma once

#include "tanum/dag.hpp"
#include "tanum/formulation.hpp"
#include "tanum/reduction.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Deliberately naive reference implementations for tests and acceptance runs.
// No logic is shared with the production modules: sums, feasibility and
// determinants are recomputed from scratch here.
namespace tanum::oracle {

struct BruteForceResult {
    bool solved = false;
    long long k = 0;     // least feasible max label when solved; else the k_max tried
    Labeling witness;    // set iff solved
    std::uint64_t enumerated = 0;
};

// Tries every f in {1..k}^n for k = 1..k_max; the first feasible k is the
// topological additive number provided k_max is at least the known upper
// bound. Guard: k_max^n <= 1e9, throws std::invalid_argument beyond.
BruteForceResult brute_force_eta(const Dag& d, long long k_max);

struct TuViolation {
    std::vector<int> rows, cols;  // ascending indices into the matrix
    long long det = 0;            // |det| >= 2
};

// Enumerates all square submatrices by increasing size, exact integer Bareiss
// determinants, returns the first violation or nullopt (matrix is TU).
// Guard: dims <= 24 and at most 1e8 submatrices, throws std::invalid_argument.
std::optional<TuViolation> tu_subdeterminant(const IpfMatrix& m);

// Targeted search for the proof-shaped violation: one arc row plus the two
// k-rows of vertices u, w over columns {f(u), f(w), k}, |det| = 2. Exists
// whenever the underlying graph is connected and not complete.
std::optional<TuViolation> find_mprime_violation(const IpfMatrix& m);

struct DpllResult {
    bool sat = false;
    std::vector<bool> assignment;  // total over num_vars, set iff sat
};

// Complete DPLL with unit propagation; branches on the smallest unassigned
// variable, true first.
DpllResult dpll_sat(const CnfFormula& phi);

}  // namespace tanum::oracle
