#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tanum {

using Labeling = std::vector<long long>;  // values[v] = f(v), must be >= 1
using SumVector = std::vector<long long>; // sums[v] = S(v) = sum of f over undirected neighbors

// Vertex parts, e.g. a bipartition {V1, V2} or multipartite parts ordered by arc direction.
using Partition = std::vector<std::vector<int>>;

// Immutable DAG. Vertices are 0-based ints in the API; the text format and all
// CLI output use 1-based ids. Construction validates: no self-loops, no
// duplicate or anti-parallel arcs, no directed cycle.
class Dag {
public:
    // arcs as 0-based (tail, head) pairs
    static Dag from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_arc(int u, int v) const;
    bool is_connected() const;

    // Vertices in a topological order: position(tail) < position(head) for
    // every arc. Deterministic: among ready vertices, smallest id first.
    const std::vector<int>& topological_order() const { return topo_order_; }
    int topo_position(int v) const { return topo_pos_[v]; }

    std::string to_text() const;

private:
    Dag() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> adj_;  // sorted undirected neighbor lists
    std::unordered_set<long long> arc_set_;
    std::vector<int> topo_order_, topo_pos_;
};

// Text format: 'c' comment lines, one 'p dag <n> <m>' header, then m lines
// 'a <tail> <head>' with 1-based ids. Throws std::runtime_error on malformed
// input or on a digraph that violates the Dag invariants.
Dag parse_dag(std::istream& in);
Dag parse_dag(const std::string& text);

// S(v) for every vertex. Throws std::invalid_argument on size mismatch or a
// label < 1.
SumVector neighbor_sums(const Dag& d, const Labeling& f);

// True iff S(u) < S(v) for every arc (u, v).
bool is_topological_additive(const Dag& d, const Labeling& f);

// Sufficient non-membership test: a pair (u, v) with N(u) subseteq N(v) and a
// directed path from v to u. Returns the first such pair in ascending (u, v)
// order, or nullopt. Not necessary: absence proves nothing.
std::optional<std::pair<int, int>> obs22_infeasibility(const Dag& d);

// If the underlying graph is bipartite with parts {V1, V2} and every arc runs
// from V1 to V2, returns {V1, V2} (each sorted). Requires a connected digraph
// (throws std::invalid_argument otherwise); connectivity makes the bipartition
// unique up to swapping, so the orientation fixes it.
std::optional<Partition> detect_monotone_bipartite(const Dag& d);

// If the underlying graph is complete multipartite and all arcs between two
// parts run the same way, returns parts ordered so arcs go from lower-index
// parts to higher-index parts. Requires a connected digraph (throws
// std::invalid_argument otherwise).
std::optional<Partition> detect_complete_monotone_multipartite(const Dag& d);

}  // namespace tanum
