#include "tanum/solver.hpp"

#include "tanum/bounds.hpp"
#include "tanum/families.hpp"
#include "tanum/lp.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace tanum {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// A vertex whose label never appears on the tail side of a constraint without
// also appearing on the head side can be pinned to k (raising it never breaks
// anything); the mirror case pins to 1. Conditions are purely structural, so
// the pins compose. Returns +1 (pin to k), -1 (pin to 1) or 0 per vertex.
std::vector<int> dominance_fixes(const Dag& d) {
    int n = d.num_vertices();
    std::vector<char> bad_k(n, 0), bad_1(n, 0);
    for (auto [a, b] : d.arcs()) {
        const auto& na = d.neighbors(a);
        const auto& nb = d.neighbors(b);
        std::vector<int> only_a, only_b;
        std::set_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(only_a));
        std::set_difference(nb.begin(), nb.end(), na.begin(), na.end(), std::back_inserter(only_b));
        for (int w : only_a) bad_k[w] = 1;
        for (int w : only_b) bad_1[w] = 1;
    }
    std::vector<int> fix(n, 0);
    for (int w = 0; w < n; ++w) {
        if (!bad_k[w])
            fix[w] = 1;
        else if (!bad_1[w])
            fix[w] = -1;
    }
    return fix;
}

enum class Inner { Found, Exhausted, Budget };

struct Search {
    const Dag& d;
    long long k;
    const SolveOptions& opts;
    Clock::time_point start = Clock::now();

    Labeling f;                         // 0 = unassigned
    std::vector<long long> lo, hi;      // neighbor-sum bounds under the partial labeling
    std::vector<std::vector<int>> watch;  // vertex -> arcs whose bounds it moves
    std::vector<int> order;
    std::uint64_t nodes = 0;

    explicit Search(const Dag& dag, long long k_value, const SolveOptions& options)
        : d(dag), k(k_value), opts(options), f(dag.num_vertices(), 0) {}

    bool budget_exceeded() {
        if (nodes > opts.max_nodes) return true;
        if ((nodes & 1023) == 0 && elapsed_seconds(start) > opts.max_seconds) return true;
        return false;
    }

    void assign(int w, long long val) {
        f[w] = val;
        for (int v : d.neighbors(w)) {
            lo[v] += val - 1;
            hi[v] -= k - val;
        }
    }

    void unassign(int w, long long val) {
        f[w] = 0;
        for (int v : d.neighbors(w)) {
            lo[v] -= val - 1;
            hi[v] += k - val;
        }
    }

    bool arcs_consistent(const std::vector<int>& arc_ids) const {
        for (int id : arc_ids) {
            auto [a, b] = d.arcs()[id];
            if (lo[a] >= hi[b]) return false;
        }
        return true;
    }

    Inner dfs(std::size_t depth) {
        if (depth == order.size()) {
            if (!is_topological_additive(d, f))
                throw std::logic_error("interval propagation accepted an invalid labeling");
            return Inner::Found;
        }
        int w = order[depth];
        for (long long val = 1; val <= k; ++val) {
            ++nodes;
            if (budget_exceeded()) return Inner::Budget;
            assign(w, val);
            if (arcs_consistent(watch[w])) {
                Inner r = dfs(depth + 1);
                if (r != Inner::Exhausted) return r;
            }
            unassign(w, val);
        }
        return Inner::Exhausted;
    }

    Inner run() {
        int n = d.num_vertices();
        std::vector<int> fix = dominance_fixes(d);
        for (int w = 0; w < n; ++w)
            if (fix[w]) f[w] = fix[w] > 0 ? k : 1;

        lo.assign(n, 0);
        hi.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : d.neighbors(v)) {
                lo[v] += f[w] ? f[w] : 1;
                hi[v] += f[w] ? f[w] : k;
            }
        for (auto [a, b] : d.arcs())
            if (lo[a] >= hi[b]) return Inner::Exhausted;

        watch.assign(n, {});
        for (int id = 0; id < d.num_arcs(); ++id) {
            auto [a, b] = d.arcs()[id];
            std::vector<int> movers;
            for (int w : d.neighbors(a)) movers.push_back(w);
            for (int w : d.neighbors(b)) movers.push_back(w);
            std::sort(movers.begin(), movers.end());
            movers.erase(std::unique(movers.begin(), movers.end()), movers.end());
            for (int w : movers)
                if (!f[w]) watch[w].push_back(id);
        }

        order.clear();
        const auto& topo = d.topological_order();
        for (auto it = topo.rbegin(); it != topo.rend(); ++it)
            if (!f[*it]) order.push_back(*it);
        return dfs(0);
    }

    Inner run_enumeration() {
        order = d.topological_order();
        return enumerate(0);
    }

    Inner enumerate(std::size_t depth) {
        if (depth == order.size())
            return is_topological_additive(d, f) ? Inner::Found : Inner::Exhausted;
        int w = order[depth];
        for (long long val = 1; val <= k; ++val) {
            ++nodes;
            if (budget_exceeded()) return Inner::Budget;
            f[w] = val;
            Inner r = enumerate(depth + 1);
            if (r != Inner::Exhausted) return r;
        }
        f[w] = 0;
        return Inner::Exhausted;
    }
};

}  // namespace

DecideResult decide_k(const Dag& d, long long k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Search search(d, k, opts);
    Inner inner = opts.use_propagation ? search.run() : search.run_enumeration();
    DecideResult result;
    result.nodes = search.nodes;
    result.seconds = elapsed_seconds(search.start);
    switch (inner) {
        case Inner::Found:
            result.status = DecideStatus::Found;
            result.witness = search.f;
            break;
        case Inner::Exhausted:
            result.status = DecideStatus::None;
            break;
        case Inner::Budget:
            result.status = DecideStatus::BudgetExceeded;
            break;
    }
    return result;
}

SolveResult compute_eta_t(const Dag& d, const SolveOptions& opts) {
    if (!d.is_connected()) throw std::invalid_argument("digraph must be connected");
    Clock::time_point start = Clock::now();
    SolveResult res;

    std::optional<Membership> mem = membership(d);
    if (!mem) {
        res.status = SolveStatus::NotInD;
        res.stats.method = "membership";
        res.stats.seconds = elapsed_seconds(start);
        return res;
    }
    res.stats.upper_bound = mem->k_ub;

    if (opts.use_closed_forms) {
        if (auto parts = detect_complete_monotone_multipartite(d)) {
            FamilyResult fam = eta_complete_monotone_rpartite(*parts, d);
            res.status = SolveStatus::Solved;
            res.eta_t = fam.value;
            res.witness = std::move(fam.witness);
            res.stats.lower_bound = fam.value;
            res.stats.method = "complete-multipartite";
            res.stats.seconds = elapsed_seconds(start);
            return res;
        }
        if (auto parts = detect_monotone_bipartite(d)) {
            FamilyResult fam = eta_monotone_bipartite(*parts, d);
            res.status = SolveStatus::Solved;
            res.eta_t = fam.value;
            res.witness = std::move(fam.witness);
            res.stats.lower_bound = fam.value;
            res.stats.method = "monotone-bipartite";
            res.stats.seconds = elapsed_seconds(start);
            return res;
        }
    }

    res.stats.method = "search";
    res.stats.lower_bound = best_lower_bound(d, mem->lr_optimum);
    for (long long k = res.stats.lower_bound; k <= mem->k_ub; ++k) {
        SolveOptions remaining = opts;
        double left = opts.max_seconds - elapsed_seconds(start);
        std::uint64_t nodes_left =
            opts.max_nodes > res.stats.nodes ? opts.max_nodes - res.stats.nodes : 0;
        if (left <= 0 || nodes_left == 0) {
            res.status = SolveStatus::BudgetExceeded;
            res.stats.seconds = elapsed_seconds(start);
            return res;
        }
        remaining.max_seconds = left;
        remaining.max_nodes = nodes_left;
        DecideResult dec = decide_k(d, k, remaining);
        res.stats.nodes += dec.nodes;
        if (dec.status == DecideStatus::BudgetExceeded) {
            res.status = SolveStatus::BudgetExceeded;
            res.stats.seconds = elapsed_seconds(start);
            return res;
        }
        if (dec.status == DecideStatus::Found) {
            res.status = SolveStatus::Solved;
            res.eta_t = k;
            res.witness = std::move(dec.witness);
            res.stats.seconds = elapsed_seconds(start);
            return res;
        }
    }
    throw std::logic_error("k sweep passed the relaxation upper bound without an answer");
}

}  // namespace tanum
