#pragma once

#include "tanum/dag.hpp"

#include <vector>

namespace tanum {

// s_r = |V_r|; s_i = max(1 + s_{i+1}, |V_i|) going down. Strictly decreasing.
std::vector<long long> part_label_sums(const std::vector<int>& sizes);

struct FamilyResult {
    long long value = 0;
    Labeling witness;
};

// Closed form for a complete monotone r-partite digraph with parts as
// returned by detect_complete_monotone_multipartite: value is the max over
// parts of ceil(s_i / |V_i|); the witness gives part i labels in
// {floor, ceil}(s_i / |V_i|) summing to s_i, lowest ids taking the ceiling.
// Throws std::invalid_argument when parts do not match d.
FamilyResult eta_complete_monotone_rpartite(const Partition& parts, const Dag& d);

// Closed form for a connected monotone bipartite digraph with parts (V1, V2)
// as returned by detect_monotone_bipartite: value p is the max over arcs
// (u,v) of floor(d(u)/d(v)) + 1; the witness labels V1 with p and V2 with 1.
// Throws std::invalid_argument when parts do not match d or d is not
// connected monotone bipartite.
FamilyResult eta_monotone_bipartite(const Partition& parts, const Dag& d);

}  // namespace tanum
