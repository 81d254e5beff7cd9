#include "tanum/bounds.hpp"

#include "tanum/dag.hpp"
#include "tanum/rational.hpp"

#include <algorithm>

namespace tanum {

namespace {

void extend_clique(const Dag& d, std::vector<int>& current, std::vector<int>& candidates,
                   CliqueEnumeration& out, std::size_t max_count) {
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (out.truncated) return;
        int v = candidates[idx];
        current.push_back(v);
        if (current.size() >= 2) {
            if (out.cliques.size() >= max_count) {
                out.truncated = true;
                current.pop_back();
                return;
            }
            out.cliques.push_back(current);
        }
        std::vector<int> next;
        for (std::size_t jdx = idx + 1; jdx < candidates.size(); ++jdx) {
            int w = candidates[jdx];
            if (d.has_arc(v, w) || d.has_arc(w, v)) next.push_back(w);
        }
        extend_clique(d, current, next, out, max_count);
        current.pop_back();
    }
}

}  // namespace

CliqueEnumeration enumerate_cliques(const Dag& d, std::size_t max_count) {
    CliqueEnumeration out;
    std::vector<int> current;
    std::vector<int> candidates(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) candidates[v] = v;
    extend_clique(d, current, candidates, out, max_count);
    return out;
}

CliqueBound clique_lower_bound(const Dag& d, std::size_t max_count) {
    CliqueEnumeration all = enumerate_cliques(d, max_count);
    CliqueBound best;
    best.truncated = all.truncated;
    for (const auto& q : all.cliques) {
        // Arcs inside a clique of an acyclic digraph form a transitive
        // tournament, so any topological order of the whole digraph sorts it.
        int q_first = q[0], q_last = q[0];
        for (int v : q) {
            if (d.topo_position(v) < d.topo_position(q_first)) q_first = v;
            if (d.topo_position(v) > d.topo_position(q_last)) q_last = v;
        }
        long long num = d.degree(q_first) + 1;
        long long den = d.degree(q_last) - static_cast<long long>(q.size()) + 2;
        long long value = (num + den - 1) / den;
        if (best.clique.empty() || value > best.value) {
            best.clique = q;
            best.q_first = q_first;
            best.q_last = q_last;
            best.value = value;
        }
    }
    return best;
}

long long omega_bound(const Dag& d) {
    CliqueEnumeration all = enumerate_cliques(d);
    long long omega = 1;
    for (const auto& q : all.cliques) omega = std::max(omega, static_cast<long long>(q.size()));
    long long n = d.num_vertices();
    return (omega + (n - omega + 1) - 1) / (n - omega + 1);
}

bool eta_one_test(const Dag& d) {
    for (auto [u, v] : d.arcs())
        if (d.degree(u) >= d.degree(v)) return false;
    return true;
}

long long best_lower_bound(const Dag& d, const Rational& lr_optimum) {
    long long best = 1;
    best = std::max(best, clique_lower_bound(d).value);
    best = std::max(best, omega_bound(d));
    best = std::max(best, to_long_long(ceil_rational(lr_optimum)));
    return best;
}

}  // namespace tanum
