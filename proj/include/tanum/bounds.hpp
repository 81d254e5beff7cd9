#pragma once

#include "tanum/dag.hpp"
#include "tanum/rational.hpp"

#include <cstddef>
#include <vector>

namespace tanum {

struct CliqueEnumeration {
    std::vector<std::vector<int>> cliques;  // all cliques of size >= 2, ascending within each
    bool truncated = false;                 // true when max_count was hit
};

// Backtracking expansion in ascending vertex order; every clique (not only
// maximal ones) appears exactly once, in a deterministic order.
CliqueEnumeration enumerate_cliques(const Dag& d, std::size_t max_count = 1'000'000);

struct CliqueBound {
    std::vector<int> clique;  // the witnessing clique Q
    int q_first = -1;         // source of the tournament induced on Q
    int q_last = -1;          // sink of that tournament
    long long value = 1;      // ceil((d(q_first)+1) / (d(q_last)-|Q|+2))
    bool truncated = false;   // clique enumeration hit its cap
};

// Max of the clique bound over every enumerated clique. Meaningful only when
// the digraph admits a numbering at all; callers establish membership first.
// Returns value 1 with an empty clique when G(D) has no edge.
CliqueBound clique_lower_bound(const Dag& d, std::size_t max_count = 1'000'000);

// ceil(omega / (n - omega + 1)) with omega the max clique size of G(D).
long long omega_bound(const Dag& d);

// True iff d(u) < d(v) for every arc, i.e. the all-ones labeling works.
bool eta_one_test(const Dag& d);

// max(clique bound, omega bound, ceil(lr_optimum)). The caller passes the
// relaxation optimum it obtained when establishing membership.
long long best_lower_bound(const Dag& d, const Rational& lr_optimum);

}  // namespace tanum
