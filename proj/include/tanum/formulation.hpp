#pragma once

#include "tanum/dag.hpp"

#include <string>
#include <vector>

namespace tanum {

// Coefficient matrix of the integer formulation: one row per arc (input
// order), then one row k - f(v) >= 0 per vertex. Columns f(1..n), then k.
// The f(v) >= 1 bound rows are not part of the matrix.
struct IpfMatrix {
    int num_arcs = 0;
    int num_vertices = 0;
    std::vector<std::vector<int>> entries;  // values in {-1, 0, +1}

    int rows() const { return num_arcs + num_vertices; }
    int cols() const { return num_vertices + 1; }
    bool is_arc_row(int r) const { return r < num_arcs; }
};

IpfMatrix build_ipf_matrix(const Dag& d);

// One row per line, space-separated integers.
std::string to_text(const IpfMatrix& m);

// The matrix above is totally unimodular iff the underlying graph is
// complete. Requires a connected digraph (throws std::invalid_argument).
bool is_tu_structural(const Dag& d);

}  // namespace tanum
