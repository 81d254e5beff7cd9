#include "tanum/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanum {

namespace {

void check_partition(const Partition& parts, const Dag& d) {
    std::vector<int> seen(d.num_vertices(), 0);
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("empty part");
        for (int v : part) {
            if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("part vertex out of range");
            if (seen[v]++) throw std::invalid_argument("vertex appears in two parts");
        }
    }
    for (int v = 0; v < d.num_vertices(); ++v)
        if (!seen[v]) throw std::invalid_argument("vertex missing from parts");
}

void check_monotone_complete(const Partition& parts, const Dag& d) {
    check_partition(parts, d);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i == j) {
                for (int u : parts[i])
                    for (int v : parts[i])
                        if (u != v && (d.has_arc(u, v) || d.has_arc(v, u)))
                            throw std::invalid_argument("arc inside a part");
            } else if (i < j) {
                for (int u : parts[i])
                    for (int v : parts[j])
                        if (!d.has_arc(u, v))
                            throw std::invalid_argument("missing arc between parts");
            }
        }
}

}  // namespace

std::vector<long long> part_label_sums(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("sizes must be nonempty");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
    int r = static_cast<int>(sizes.size());
    std::vector<long long> s(r);
    s[r - 1] = sizes[r - 1];
    for (int i = r - 2; i >= 0; --i) s[i] = std::max(1 + s[i + 1], static_cast<long long>(sizes[i]));
    return s;
}

FamilyResult eta_complete_monotone_rpartite(const Partition& parts, const Dag& d) {
    check_monotone_complete(parts, d);
    std::vector<int> sizes;
    sizes.reserve(parts.size());
    for (const auto& part : parts) sizes.push_back(static_cast<int>(part.size()));
    std::vector<long long> s = part_label_sums(sizes);

    FamilyResult result;
    result.witness.assign(d.num_vertices(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long size = static_cast<long long>(parts[i].size());
        long long base = s[i] / size;
        long long extra = s[i] % size;  // lowest ids carry the ceiling
        result.value = std::max(result.value, base + (extra ? 1 : 0));
        std::vector<int> ordered = parts[i];
        std::sort(ordered.begin(), ordered.end());
        for (long long pos = 0; pos < size; ++pos)
            result.witness[ordered[pos]] = base + (pos < extra ? 1 : 0);
    }
    return result;
}

FamilyResult eta_monotone_bipartite(const Partition& parts, const Dag& d) {
    if (parts.size() != 2) throw std::invalid_argument("expected exactly two parts");
    check_partition(parts, d);
    if (!d.is_connected()) throw std::invalid_argument("digraph must be connected");
    std::vector<int> side(d.num_vertices(), 0);
    for (int v : parts[1]) side[v] = 1;
    long long p = 1;
    for (auto [u, v] : d.arcs()) {
        if (side[u] != 0 || side[v] != 1)
            throw std::invalid_argument("arcs must run from the first part to the second");
        p = std::max(p, d.degree(u) / static_cast<long long>(d.degree(v)) + 1);
    }
    FamilyResult result;
    result.value = p;
    result.witness.assign(d.num_vertices(), 0);
    for (int v = 0; v < d.num_vertices(); ++v) result.witness[v] = side[v] ? 1 : p;
    return result;
}

}  // namespace tanum
