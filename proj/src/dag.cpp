#include "tanum/dag.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tanum {

namespace {

long long arc_key(int u, int v) { return static_cast<long long>(u) * 1'000'000'007LL + v; }

}  // namespace

Dag Dag::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 1) throw std::runtime_error("vertex count must be at least 1");
    Dag d;
    d.n_ = n;
    d.adj_.assign(n, {});
    d.arcs_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("vertex id out of range");
        if (u == v) throw std::runtime_error("self-loop rejected");
        if (d.arc_set_.count(arc_key(u, v)))
            throw std::runtime_error("duplicate arc rejected");
        if (d.arc_set_.count(arc_key(v, u)))
            throw std::runtime_error("anti-parallel arc pair rejected");
        d.arc_set_.insert(arc_key(u, v));
        d.arcs_.emplace_back(u, v);
        d.adj_[u].push_back(v);
        d.adj_[v].push_back(u);
    }
    for (auto& nb : d.adj_) std::sort(nb.begin(), nb.end());

    // Kahn with a min-heap: smallest ready vertex first, so the order is
    // deterministic and doubles as the cycle check.
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : d.arcs_) indeg[v]++;
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    d.topo_order_.reserve(n);
    std::vector<std::vector<int>> out(n);
    for (auto [u, v] : d.arcs_) out[u].push_back(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        d.topo_order_.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(d.topo_order_.size()) != n)
        throw std::runtime_error("cycle detected");
    d.topo_pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) d.topo_pos_[d.topo_order_[i]] = i;
    return d;
}

bool Dag::has_arc(int u, int v) const { return arc_set_.count(arc_key(u, v)) > 0; }

bool Dag::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::string Dag::to_text() const {
    std::ostringstream out;
    out << "p dag " << n_ << ' ' << arcs_.size() << '\n';
    for (auto [u, v] : arcs_) out << "a " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Dag parse_dag(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> arcs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "dag" || n < 1 || m < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad header, expected 'p dag <n> <m>'");
            continue;
        }
        if (tag == "a") {
            if (n == -1) throw std::runtime_error("line " + std::to_string(lineno) + ": arc before header");
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad arc line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::runtime_error("line " + std::to_string(lineno) + ": vertex id out of range");
            std::string rest;
            if (ls >> rest)
                throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens on arc line");
            arcs.emplace_back(u - 1, v - 1);
            continue;
        }
        throw std::runtime_error("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (n == -1) throw std::runtime_error("missing 'p dag' header");
    if (static_cast<long long>(arcs.size()) != m)
        throw std::runtime_error("arc count mismatch: header says " + std::to_string(m) +
                                 ", found " + std::to_string(arcs.size()));
    return Dag::from_arcs(n, arcs);
}

Dag parse_dag(const std::string& text) {
    std::istringstream in(text);
    return parse_dag(in);
}

SumVector neighbor_sums(const Dag& d, const Labeling& f) {
    if (static_cast<int>(f.size()) != d.num_vertices())
        throw std::invalid_argument("labeling size does not match vertex count");
    for (long long x : f)
        if (x < 1) throw std::invalid_argument("labels must be positive");
    SumVector sums(d.num_vertices(), 0);
    for (int v = 0; v < d.num_vertices(); ++v)
        for (int w : d.neighbors(v)) sums[v] += f[w];
    return sums;
}

bool is_topological_additive(const Dag& d, const Labeling& f) {
    SumVector s = neighbor_sums(d, f);
    for (auto [u, v] : d.arcs())
        if (s[u] >= s[v]) return false;
    return true;
}

std::optional<std::pair<int, int>> obs22_infeasibility(const Dag& d) {
    int n = d.num_vertices();
    // reach[v] = vertices reachable from v by a nonempty directed path
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    std::vector<std::vector<int>> out(n);
    for (auto [u, v] : d.arcs()) out[u].push_back(v);
    const auto& order = d.topological_order();
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        for (int w : out[v]) {
            reach[v][w] = 1;
            for (int t = 0; t < n; ++t)
                if (reach[w][t]) reach[v][t] = 1;
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || !reach[v][u]) continue;
            const auto& nu = d.neighbors(u);
            const auto& nv = d.neighbors(v);
            if (std::includes(nv.begin(), nv.end(), nu.begin(), nu.end()))
                return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

std::optional<Partition> detect_monotone_bipartite(const Dag& d) {
    if (!d.is_connected()) throw std::invalid_argument("monotone bipartite detection needs a connected digraph");
    int n = d.num_vertices();
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : d.neighbors(v)) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    if (d.num_arcs() == 0) return std::nullopt;  // n == 1: no side holds tails
    int tail_color = color[d.arcs()[0].first];
    for (auto [u, v] : d.arcs())
        if (color[u] != tail_color) return std::nullopt;
    Partition parts(2);
    for (int v = 0; v < n; ++v) parts[color[v] == tail_color ? 0 : 1].push_back(v);
    return parts;
}

std::optional<Partition> detect_complete_monotone_multipartite(const Dag& d) {
    if (!d.is_connected())
        throw std::invalid_argument("complete multipartite detection needs a connected digraph");
    int n = d.num_vertices();
    // Parts = connected components of the complement; valid iff each is an
    // independent set of G(D). Cross-part adjacency is then automatic.
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts_raw;
    for (int v = 0; v < n; ++v) {
        if (part_of[v] != -1) continue;
        std::vector<int> comp{v};
        part_of[v] = static_cast<int>(parts_raw.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int a = comp[i];
            const auto& nb = d.neighbors(a);
            std::size_t j = 0;
            for (int b = 0; b < n; ++b) {
                while (j < nb.size() && nb[j] < b) ++j;
                bool adjacent = j < nb.size() && nb[j] == b;
                if (b == a || adjacent) continue;
                if (part_of[b] == -1) {
                    part_of[b] = part_of[v];
                    comp.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        parts_raw.push_back(std::move(comp));
    }
    for (const auto& part : parts_raw)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (std::binary_search(d.neighbors(part[i]).begin(), d.neighbors(part[i]).end(),
                                       part[j]))
                    return std::nullopt;  // complement component is not independent in G(D)

    // Arc direction between each pair of parts must be consistent, and the
    // part-level tournament must be acyclic (then it is a total order).
    int r = static_cast<int>(parts_raw.size());
    std::vector<std::vector<int>> dir(r, std::vector<int>(r, 0));  // 1: i->j
    for (auto [u, v] : d.arcs()) {
        int i = part_of[u], j = part_of[v];
        if (dir[j][i] == 1) return std::nullopt;  // opposite arc seen before
        dir[i][j] = 1;
    }
    std::vector<int> indeg(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) indeg[j] += dir[i][j];
    std::vector<int> order;
    std::vector<char> used(r, 0);
    for (int step = 0; step < r; ++step) {
        int pick = -1;
        for (int i = 0; i < r; ++i)
            if (!used[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == -1) return std::nullopt;  // cycle among parts
        used[pick] = 1;
        order.push_back(pick);
        for (int j = 0; j < r; ++j)
            if (dir[pick][j]) --indeg[j];
    }
    Partition parts;
    parts.reserve(r);
    for (int i : order) parts.push_back(parts_raw[i]);
    return parts;
}

}  // namespace tanum
