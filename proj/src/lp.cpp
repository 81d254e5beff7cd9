#include "tanum/lp.hpp"

#include "tanum/dag.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tanum {

LinearProgram build_lr(const Dag& d) {
    int n = d.num_vertices();
    LinearProgram lp;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;  // minimize k
    lp.var_names.reserve(n + 1);
    for (int v = 0; v < n; ++v) lp.var_names.push_back("f(" + std::to_string(v + 1) + ")");
    lp.var_names.push_back("k");
    for (auto [u, v] : d.arcs()) {
        LinearRow row;
        row.coeffs.assign(n + 1, Rational(0));
        for (int w : d.neighbors(v)) row.coeffs[w] += 1;
        for (int w : d.neighbors(u)) row.coeffs[w] -= 1;
        row.rhs = 1;
        lp.rows.push_back(std::move(row));
    }
    for (int v = 0; v < n; ++v) {
        LinearRow row;
        row.coeffs.assign(n + 1, Rational(0));
        row.coeffs[v] = -1;
        row.coeffs[n] = 1;
        row.rhs = 0;
        lp.rows.push_back(std::move(row));  // k - f(v) >= 0
    }
    for (int v = 0; v < n; ++v) {
        LinearRow row;
        row.coeffs.assign(n + 1, Rational(0));
        row.coeffs[v] = 1;
        row.rhs = 1;
        lp.rows.push_back(std::move(row));  // f(v) >= 1
    }
    return lp;
}

namespace {

// Dense tableau over exact rationals. Columns: the split variables
// (x = xp - xm), one surplus per row, one artificial per row, then the rhs.
// Bland's rule throughout, so the iteration always terminates.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp) : n_(static_cast<int>(lp.objective.size())) {
        for (const auto& row : lp.rows)
            if (static_cast<int>(row.coeffs.size()) != n_)
                throw std::invalid_argument("row width does not match objective width");
        m_ = static_cast<int>(lp.rows.size());
        cols_ = 2 * n_ + 2 * m_;
        tab_.assign(m_, RationalVector(cols_ + 1, Rational(0)));
        for (int i = 0; i < m_; ++i) {
            const auto& row = lp.rows[i];
            int sign = row.rhs < 0 ? -1 : 1;  // keep rhs nonnegative
            for (int j = 0; j < n_; ++j) {
                tab_[i][j] = sign * row.coeffs[j];
                tab_[i][n_ + j] = -sign * row.coeffs[j];
            }
            tab_[i][2 * n_ + i] = -sign;          // surplus
            tab_[i][2 * n_ + m_ + i] = 1;         // artificial
            tab_[i][cols_] = sign * row.rhs;
        }
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) basis_[i] = art_begin() + i;
        alive_.assign(cols_, true);
    }

    LpSolution solve(const RationalVector& objective) {
        // Phase 1: minimize the sum of artificials.
        RationalVector phase1(cols_, Rational(0));
        for (int j = art_begin(); j < cols_; ++j) phase1[j] = 1;
        Rational art_sum = run_phase(phase1);
        if (art_sum != 0) return {LpStatus::Infeasible, {}, Rational(0)};
        purge_artificials();

        // Phase 2: the real objective on the split variables.
        RationalVector phase2(cols_, Rational(0));
        for (int j = 0; j < n_; ++j) {
            phase2[j] = objective[j];
            phase2[n_ + j] = -objective[j];
        }
        if (!run_phase2(phase2)) return {LpStatus::Unbounded, {}, Rational(0)};

        RationalVector x(n_, Rational(0));
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_)
                x[basis_[i]] += tab_[i][cols_];
            else if (basis_[i] < 2 * n_)
                x[basis_[i] - n_] -= tab_[i][cols_];
        }
        Rational value = 0;
        for (int j = 0; j < n_; ++j) value += objective[j] * x[j];
        return {LpStatus::Optimal, std::move(x), std::move(value)};
    }

private:
    int art_begin() const { return 2 * n_ + m_; }

    RationalVector reduced_costs(const RationalVector& cost) const {
        RationalVector r = cost;
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < cols_; ++j)
                if (tab_[i][j] != 0) r[j] -= cb * tab_[i][j];
        }
        return r;
    }

    // One simplex phase; returns the final objective value. Entering column:
    // smallest alive index with negative reduced cost. Leaving row: smallest
    // ratio, ties broken by smallest basis index (Bland).
    Rational run_phase(const RationalVector& cost) {
        RationalVector r = reduced_costs(cost);
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j)
                if (alive_[j] && r[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == -1) break;
            int leave = pick_leaving(enter);
            assert(leave != -1);  // phase-1 objective is bounded below by 0
            pivot(leave, enter, r);
        }
        Rational value = 0;
        for (int i = 0; i < m_; ++i) value += cost[basis_[i]] * tab_[i][cols_];
        return value;
    }

    bool run_phase2(const RationalVector& cost) {
        RationalVector r = reduced_costs(cost);
        while (true) {
            int enter = -1;
            for (int j = 0; j < art_begin(); ++j)
                if (alive_[j] && r[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == -1) return true;
            int leave = pick_leaving(enter);
            if (leave == -1) return false;  // unbounded direction
            pivot(leave, enter, r);
        }
    }

    int pick_leaving(int enter) const {
        int leave = -1;
        Rational best;
        for (int i = 0; i < m_; ++i) {
            if (tab_[i][enter] <= 0) continue;
            Rational ratio = tab_[i][cols_] / tab_[i][enter];
            if (leave == -1 || ratio < best ||
                (ratio == best && basis_[i] < basis_[leave])) {
                leave = i;
                best = ratio;
            }
        }
        return leave;
    }

    void pivot(int leave, int enter, RationalVector& r) {
        int old = basis_[leave];
        if (old >= art_begin()) alive_[old] = false;  // artificials never come back
        Rational inv = Rational(1) / tab_[leave][enter];
        for (int j = 0; j <= cols_; ++j) tab_[leave][j] *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave || tab_[i][enter] == 0) continue;
            Rational factor = tab_[i][enter];
            for (int j = 0; j <= cols_; ++j) tab_[i][j] -= factor * tab_[leave][j];
        }
        if (r[enter] != 0) {
            Rational factor = r[enter];
            for (int j = 0; j < cols_; ++j) r[j] -= factor * tab_[leave][j];
        }
        basis_[leave] = enter;
    }

    // After phase 1 some artificials may sit in the basis at value zero.
    // Swap each for any alive non-artificial column, or drop the row as
    // redundant when none exists.
    void purge_artificials() {
        RationalVector no_cost(cols_, Rational(0));
        for (int i = static_cast<int>(basis_.size()) - 1; i >= 0; --i) {
            if (basis_[i] < art_begin()) continue;
            int enter = -1;
            for (int j = 0; j < art_begin(); ++j)
                if (alive_[j] && tab_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter == -1) {
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                continue;
            }
            pivot(i, enter, no_cost);
        }
        for (int j = art_begin(); j < cols_; ++j) alive_[j] = false;
    }

    int n_, m_, cols_;
    std::vector<RationalVector> tab_;
    std::vector<int> basis_;
    std::vector<bool> alive_;
};

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
    if (lp.objective.empty()) throw std::invalid_argument("empty program");
    return Simplex(lp).solve(lp.objective);
}

Labeling scale_to_integer(const RationalVector& x) {
    for (const Rational& q : x)
        if (q < 1) throw std::invalid_argument("entries must be at least 1");
    BigInt lambda = 1;
    for (const Rational& q : x) lambda = lcm(lambda, BigInt(denominator(q)));
    Labeling out;
    out.reserve(x.size());
    for (const Rational& q : x) {
        Rational scaled = q * lambda;
        out.push_back(to_long_long(BigInt(numerator(scaled))));
    }
    return out;
}

std::optional<Membership> membership(const Dag& d) {
    LpSolution sol = simplex_solve(build_lr(d));
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("relaxation cannot be unbounded: k >= f(v) >= 1");
    RationalVector f(sol.x.begin(), sol.x.begin() + d.num_vertices());
    Membership result;
    result.witness = scale_to_integer(f);
    result.lr_optimum = sol.value;
    result.k_ub = *std::max_element(result.witness.begin(), result.witness.end());
    if (!is_topological_additive(d, result.witness))
        throw std::logic_error("scaled relaxation witness failed verification");
    return result;
}

}  // namespace tanum
