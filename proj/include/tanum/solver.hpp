#pragma once

#include "tanum/dag.hpp"

#include <cstdint>
#include <string>

namespace tanum {

struct SolveOptions {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
    bool use_closed_forms = true;  // compute_eta_t only
    bool use_propagation = true;   // false: pure-enumeration fallback for cross-checks
};

enum class DecideStatus { Found, None, BudgetExceeded };

struct DecideResult {
    DecideStatus status = DecideStatus::None;
    Labeling witness;  // set iff Found
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Is there a topological additive numbering with labels in {1..k}? Complete
// search: Found returns a witness, None proves there is no such labeling.
// DFS assigns sinks first (reverse topological order), smaller labels first,
// pruning any arc (u,v) whose sum intervals satisfy S_lo(u) >= S_hi(v); a
// dominance pass first pins vertices whose label can only help (all
// constraint coefficients one sign) to k or 1.
DecideResult decide_k(const Dag& d, long long k, const SolveOptions& opts = {});

enum class SolveStatus { NotInD, Solved, BudgetExceeded };

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    long long lower_bound = 0;  // start of the k sweep (when membership holds)
    long long upper_bound = 0;  // max label of the scaled relaxation witness
    std::string method;         // "search", "complete-multipartite", "monotone-bipartite"
};

struct SolveResult {
    SolveStatus status = SolveStatus::NotInD;
    long long eta_t = 0;  // valid iff Solved
    Labeling witness;     // valid iff Solved
    SolveStats stats;
};

// Membership first (NotInD if the relaxation is infeasible); then closed
// forms when the structure detectors fire (unless disabled); otherwise sweeps
// k from best_lower_bound up to the scaled witness max, first Found wins.
// Requires a connected digraph (throws std::invalid_argument).
SolveResult compute_eta_t(const Dag& d, const SolveOptions& opts = {});

}  // namespace tanum
