#include "tanum/reduction.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tanum {

namespace {

bool clause_has_repeat(const std::array<int, 3>& c) {
    return c[0] == c[1] || c[0] == c[2] || c[1] == c[2];
}

int parse_int_token(const std::string& tok, int lineno, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    return value;
}

}  // namespace

bool CnfFormula::has_repeated_literal() const {
    for (const auto& c : clauses)
        if (clause_has_repeat(c)) return true;
    return false;
}

CnfFormula parse_cnf(std::istream& in) {
    CnfFormula phi;
    bool have_header = false;
    long long expected_clauses = 0;
    std::vector<int> current;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string tok;
        if (!(iss >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (have_header)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate header");
            std::string kind;
            long long nv = -1, nc = -1;
            if (!(iss >> kind >> nv >> nc) || kind != "cnf" || nv < 1 || nc < 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (iss >> extra)
                throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens after header");
            phi.num_vars = static_cast<int>(nv);
            expected_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header)
            throw std::runtime_error("line " + std::to_string(lineno) + ": clause before header");
        do {
            int lit = parse_int_token(tok, lineno, "literal");
            if (lit == 0) {
                if (current.size() != 3)
                    throw std::runtime_error("line " + std::to_string(lineno) +
                                             ": clause must have exactly 3 literals");
                phi.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                if (lit < -phi.num_vars || lit > phi.num_vars)
                    throw std::runtime_error("line " + std::to_string(lineno) + ": literal out of range");
                if (current.size() == 3)
                    throw std::runtime_error("line " + std::to_string(lineno) +
                                             ": clause must have exactly 3 literals");
                current.push_back(lit);
            }
        } while (iss >> tok);
    }
    if (!have_header) throw std::runtime_error("missing 'p cnf' header");
    if (!current.empty()) throw std::runtime_error("unterminated clause at end of input");
    if (static_cast<long long>(phi.clauses.size()) != expected_clauses)
        throw std::runtime_error("clause count mismatch: header says " + std::to_string(expected_clauses) +
                                 ", found " + std::to_string(phi.clauses.size()));
    phi.num_original_vars = phi.num_vars;
    return phi;
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

CnfFormula normalize_clauses(const CnfFormula& phi) {
    CnfFormula out = phi;
    if (out.num_original_vars == 0) out.num_original_vars = out.num_vars;
    while (out.has_repeated_literal()) {
        int fresh = ++out.num_vars;  // one new variable for the whole round
        std::vector<std::array<int, 3>> next;
        next.reserve(out.clauses.size() * 2);
        for (const auto& clause : out.clauses) {
            if (!clause_has_repeat(clause)) {
                next.push_back(clause);
                continue;
            }
            int i = 0, j = 1;
            if (clause[0] == clause[1]) {
                i = 0;
                j = 1;
            } else if (clause[0] == clause[2]) {
                i = 0;
                j = 2;
            } else {
                i = 1;
                j = 2;
            }
            int y = clause[i];
            int z = clause[3 - i - j];
            next.push_back({fresh, y, z});
            next.push_back({-fresh, y, z});
        }
        out.clauses = std::move(next);
    }
    return out;
}

std::pair<Dag, ReductionMap> build_dphi(const CnfFormula& phi) {
    if (phi.num_vars < 1) throw std::invalid_argument("formula must have at least one variable");
    if (phi.clauses.empty()) throw std::invalid_argument("formula must have at least one clause");
    if (phi.has_repeated_literal())
        throw std::invalid_argument("formula must be normalized (no repeated literal in a clause)");
    for (const auto& clause : phi.clauses)
        for (int lit : clause)
            if (lit == 0 || lit < -phi.num_vars || lit > phi.num_vars)
                throw std::invalid_argument("literal out of range");

    int nv = phi.num_vars;
    int nc = static_cast<int>(phi.clauses.size());
    ReductionMap map;
    map.num_original_vars = phi.num_original_vars ? phi.num_original_vars : phi.num_vars;
    map.vars.resize(nv);
    map.clauses.resize(nc);

    for (int v = 0; v < nv; ++v) {
        int base = 13 * v;
        VarGadget& g = map.vars[v];
        g.pos = base;
        g.neg = base + 1;
        for (int i = 0; i < 5; ++i) g.x[i] = base + 2 + i;
        for (int i = 0; i < 6; ++i) g.u[i] = base + 7 + i;
    }
    for (int j = 0; j < nc; ++j) {
        int base = 13 * nv + 6 * j;
        ClauseGadget& g = map.clauses[j];
        g.c = base;
        for (int i = 0; i < 5; ++i) g.cx[i] = base + 1 + i;
        g.literals = phi.clauses[j];
    }

    auto literal_vertex = [&](int lit) {
        const VarGadget& g = map.vars[std::abs(lit) - 1];
        return lit > 0 ? g.pos : g.neg;
    };

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(12 * nv + 8 * nc);
    for (int v = 0; v < nv; ++v) {
        const VarGadget& g = map.vars[v];
        arcs.emplace_back(g.x[0], g.pos);
        arcs.emplace_back(g.x[0], g.neg);
        arcs.emplace_back(g.x[1], g.x[0]);
        arcs.emplace_back(g.x[2], g.x[1]);
        arcs.emplace_back(g.x[3], g.x[1]);
        arcs.emplace_back(g.x[4], g.x[1]);
        for (int i = 0; i < 3; ++i) arcs.emplace_back(g.u[i], g.pos);
        for (int i = 3; i < 6; ++i) arcs.emplace_back(g.u[i], g.neg);
    }
    for (int j = 0; j < nc; ++j) {
        const ClauseGadget& g = map.clauses[j];
        for (int lit : g.literals) arcs.emplace_back(g.c, literal_vertex(lit));
        arcs.emplace_back(g.c, g.cx[0]);
        arcs.emplace_back(g.cx[1], g.cx[0]);
        arcs.emplace_back(g.cx[2], g.cx[0]);
        arcs.emplace_back(g.cx[3], g.cx[0]);
        arcs.emplace_back(g.cx[4], g.c);
    }

    Dag d = Dag::from_arcs(13 * nv + 6 * nc, arcs);

    // The construction is bipartite by design; verify the invariant anyway.
    std::vector<int> color(d.num_vertices(), -1);
    for (int s = 0; s < d.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : d.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::logic_error("reduction digraph lost bipartiteness");
                }
            }
        }
    }
    return {std::move(d), std::move(map)};
}

std::string map_to_text(const ReductionMap& map) {
    std::ostringstream out;
    for (std::size_t v = 0; v < map.vars.size(); ++v) {
        const VarGadget& g = map.vars[v];
        out << g.pos + 1 << " x " << v + 1 << '\n';
        out << g.neg + 1 << " nx " << v + 1 << '\n';
        for (int i = 0; i < 5; ++i) out << g.x[i] + 1 << " x" << i + 1 << ' ' << v + 1 << '\n';
        for (int i = 0; i < 6; ++i) out << g.u[i] + 1 << " u" << i + 1 << ' ' << v + 1 << '\n';
    }
    for (std::size_t j = 0; j < map.clauses.size(); ++j) {
        const ClauseGadget& g = map.clauses[j];
        out << g.c + 1 << " c " << j + 1 << '\n';
        for (int i = 0; i < 5; ++i) out << g.cx[i] + 1 << " c" << i + 1 << ' ' << j + 1 << '\n';
    }
    return out.str();
}

Labeling encode_assignment(const CnfFormula& phi, const std::vector<bool>& gamma,
                           const ReductionMap& map) {
    if (static_cast<int>(gamma.size()) != phi.num_vars)
        throw std::invalid_argument("assignment size does not match the formula");
    if (map.vars.size() != static_cast<std::size_t>(phi.num_vars) ||
        map.clauses.size() != phi.clauses.size())
        throw std::invalid_argument("gadget map does not match the formula");
    for (const auto& clause : phi.clauses) {
        bool satisfied = false;
        for (int lit : clause)
            if (gamma[std::abs(lit) - 1] == (lit > 0)) satisfied = true;
        if (!satisfied) throw std::invalid_argument("assignment does not satisfy the formula");
    }

    Labeling f(13 * map.vars.size() + 6 * map.clauses.size(), 0);
    for (std::size_t v = 0; v < map.vars.size(); ++v) {
        const VarGadget& g = map.vars[v];
        f[g.pos] = gamma[v] ? 1 : 2;
        f[g.neg] = gamma[v] ? 2 : 1;
        f[g.x[0]] = 1;
        f[g.x[1]] = 2;
        f[g.x[2]] = f[g.x[3]] = f[g.x[4]] = 1;
        for (int i = 0; i < 6; ++i) f[g.u[i]] = 2;
    }
    for (const ClauseGadget& g : map.clauses) {
        f[g.c] = 2;
        f[g.cx[0]] = 1;
        f[g.cx[1]] = f[g.cx[2]] = f[g.cx[3]] = 2;
        f[g.cx[4]] = 1;
    }
    return f;
}

std::vector<bool> decode_labeling(const Dag& d, const Labeling& f, const ReductionMap& map) {
    if (!is_topological_additive(d, f))
        throw std::invalid_argument("labeling is not a valid numbering of the digraph");
    for (long long value : f)
        if (value > 2) throw std::invalid_argument("labeling uses a value above 2");
    std::vector<bool> gamma(map.num_original_vars);
    for (int v = 0; v < map.num_original_vars; ++v) {
        const VarGadget& g = map.vars[v];
        gamma[v] = f[g.pos] == 1 || f[g.neg] == 2;
    }
    return gamma;
}

LemmaReport check_lemmas(const Labeling& f, const ReductionMap& map) {
    LemmaReport report;
    for (std::size_t v = 0; v < map.vars.size(); ++v) {
        const VarGadget& g = map.vars[v];
        long long sum = f.at(g.pos) + f.at(g.neg);
        if (sum < 3) report.violations.push_back({false, static_cast<int>(v), sum});
    }
    for (std::size_t j = 0; j < map.clauses.size(); ++j) {
        const ClauseGadget& g = map.clauses[j];
        long long sum = 0;
        for (int lit : g.literals) {
            const VarGadget& owner = map.vars[std::abs(lit) - 1];
            sum += f.at(lit > 0 ? owner.pos : owner.neg);
        }
        if (sum > 5) report.violations.push_back({true, static_cast<int>(j), sum});
    }
    return report;
}

}  // namespace tanum
