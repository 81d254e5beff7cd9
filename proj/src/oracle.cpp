#include "tanum/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tanum::oracle {

namespace {

bool feasible_from_scratch(const Dag& d, const Labeling& f) {
    std::vector<long long> sum(d.num_vertices(), 0);
    for (auto [u, v] : d.arcs()) {
        sum[u] += f[v];
        sum[v] += f[u];
    }
    for (auto [u, v] : d.arcs())
        if (sum[u] >= sum[v]) return false;
    return true;
}

}  // namespace

BruteForceResult brute_force_eta(const Dag& d, long long k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    int n = d.num_vertices();
    double work = 1.0;
    for (int i = 0; i < n; ++i) work *= static_cast<double>(k_max);
    if (work > 1e9) throw std::invalid_argument("label space larger than 1e9");

    BruteForceResult result;
    for (long long k = 1; k <= k_max; ++k) {
        Labeling f(n, 1);
        while (true) {
            ++result.enumerated;
            if (feasible_from_scratch(d, f)) {
                result.solved = true;
                result.k = k;
                result.witness = f;
                return result;
            }
            int pos = n - 1;  // odometer, last vertex least significant
            while (pos >= 0 && f[pos] == k) f[pos--] = 1;
            if (pos < 0) break;
            ++f[pos];
        }
    }
    result.k = k_max;
    return result;
}

namespace {

// Fraction-free elimination; divisions are exact. Intermediates are minors of
// a +-1 matrix, so __int128 products cannot overflow up to dimension 24.
long long bareiss_det(std::vector<std::vector<__int128>> a) {
    int s = static_cast<int>(a.size());
    __int128 prev = 1;
    int sign = 1;
    for (int col = 0; col < s; ++col) {
        int pivot = -1;
        for (int r = col; r < s; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < s; ++r)
            for (int c = col + 1; c < s; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
        prev = a[col][col];
    }
    return sign * static_cast<long long>(a[s - 1][s - 1]);
}

bool next_combination(std::vector<int>& idx, int limit) {
    int s = static_cast<int>(idx.size());
    for (int i = s - 1; i >= 0; --i) {
        if (idx[i] < limit - (s - i)) {
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    return idx;
}

unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

}  // namespace

std::optional<TuViolation> tu_subdeterminant(const IpfMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows > 24 || cols > 24) throw std::invalid_argument("matrix too large for the exhaustive scan");
    constexpr unsigned long long kCap = 100'000'000;
    unsigned long long total = 0;
    for (int s = 1; s <= std::min(rows, cols); ++s) {
        unsigned long long product = binomial_capped(rows, s, kCap) * binomial_capped(cols, s, kCap);
        total += product;
        if (total > kCap) throw std::invalid_argument("too many submatrices for the exhaustive scan");
    }

    for (int s = 1; s <= std::min(rows, cols); ++s) {
        std::vector<int> ri = first_combination(s);
        do {
            std::vector<int> ci = first_combination(s);
            do {
                std::vector<std::vector<__int128>> sub(s, std::vector<__int128>(s));
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) sub[i][j] = m.entries[ri[i]][ci[j]];
                long long det = bareiss_det(std::move(sub));
                if (det <= -2 || det >= 2) return TuViolation{ri, ci, det};
            } while (next_combination(ci, cols));
        } while (next_combination(ri, rows));
    }
    return std::nullopt;
}

std::optional<TuViolation> find_mprime_violation(const IpfMatrix& m) {
    // Submatrix shape: one arc row over columns f(i), f(j) plus the k-rows of
    // i and j over {f(i), f(j), k}. Its determinant is the sum of the two arc
    // row entries, so any same-sign pair gives |det| = 2.
    int n = m.num_vertices;
    for (int r = 0; r < m.num_arcs; ++r)
        for (int i = 0; i < n; ++i) {
            if (m.entries[r][i] == 0) continue;
            for (int j = i + 1; j < n; ++j) {
                if (m.entries[r][j] != m.entries[r][i]) continue;
                TuViolation out;
                out.rows = {r, m.num_arcs + i, m.num_arcs + j};
                out.cols = {i, j, n};
                out.det = m.entries[r][i] + m.entries[r][j];
                return out;
            }
        }
    return std::nullopt;
}

namespace {

struct DpllState {
    const std::vector<std::array<int, 3>>& clauses;
    std::vector<int> value;  // -1 unknown, 0 false, 1 true

    bool lit_true(int lit) const {
        int v = value[std::abs(lit) - 1];
        return v != -1 && (v == 1) == (lit > 0);
    }
    bool lit_false(int lit) const {
        int v = value[std::abs(lit) - 1];
        return v != -1 && (v == 1) != (lit > 0);
    }

    // Returns false on conflict.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses) {
                int unassigned = 0, last = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    if (lit_true(lit)) {
                        satisfied = true;
                        break;
                    }
                    if (!lit_false(lit)) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1 && !lit_true(last)) {
                    value[std::abs(last) - 1] = last > 0 ? 1 : 0;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        std::vector<int> saved = value;
        if (!propagate()) {
            value = saved;
            return false;
        }
        int var = -1;
        for (std::size_t i = 0; i < value.size(); ++i)
            if (value[i] == -1) {
                var = static_cast<int>(i);
                break;
            }
        if (var == -1) return true;
        for (int attempt : {1, 0}) {
            std::vector<int> snapshot = value;
            value[var] = attempt;
            if (search()) return true;
            value = snapshot;
        }
        value = saved;
        return false;
    }
};

}  // namespace

DpllResult dpll_sat(const CnfFormula& phi) {
    DpllState state{phi.clauses, std::vector<int>(phi.num_vars, -1)};
    DpllResult result;
    result.sat = state.search();
    if (result.sat) {
        result.assignment.resize(phi.num_vars);
        for (int i = 0; i < phi.num_vars; ++i) result.assignment[i] = state.value[i] == 1;
    }
    return result;
}

}  // namespace tanum::oracle
