#include "tanum/formulation.hpp"

#include "tanum/dag.hpp"

#include <sstream>
#include <stdexcept>

namespace tanum {

IpfMatrix build_ipf_matrix(const Dag& d) {
    int n = d.num_vertices();
    int m = d.num_arcs();
    IpfMatrix mat;
    mat.num_arcs = m;
    mat.num_vertices = n;
    mat.entries.assign(m + n, std::vector<int>(n + 1, 0));
    int r = 0;
    for (auto [u, v] : d.arcs()) {
        for (int w : d.neighbors(v)) mat.entries[r][w] += 1;
        for (int w : d.neighbors(u)) mat.entries[r][w] -= 1;
        ++r;
    }
    for (int v = 0; v < n; ++v) {
        mat.entries[m + v][v] = -1;
        mat.entries[m + v][n] = 1;  // k - f(v) >= 0
    }
    return mat;
}

std::string to_text(const IpfMatrix& mat) {
    std::ostringstream out;
    for (int r = 0; r < mat.rows(); ++r) {
        for (int c = 0; c < mat.cols(); ++c) {
            if (c) out << ' ';
            out << mat.entries[r][c];
        }
        out << '\n';
    }
    return out.str();
}

bool is_tu_structural(const Dag& d) {
    if (!d.is_connected()) throw std::invalid_argument("digraph must be connected");
    // The constraint matrix is totally unimodular exactly when the underlying
    // graph is complete: every arc row then reduces to f(head) - f(tail).
    int n = d.num_vertices();
    return 2LL * d.num_arcs() == static_cast<long long>(n) * (n - 1);
}

}  // namespace tanum
