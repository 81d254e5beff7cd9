#include "tanum/cli.hpp"

#include "tanum/bounds.hpp"
#include "tanum/dag.hpp"
#include "tanum/families.hpp"
#include "tanum/formulation.hpp"
#include "tanum/lp.hpp"
#include "tanum/oracle.hpp"
#include "tanum/rational.hpp"
#include "tanum/reduction.hpp"
#include "tanum/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tanum::cli {

namespace {

using nlohmann::json;

std::string join_labels(const Labeling& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ' ';
        out << f[i];
    }
    return out.str();
}

json one_based(const std::vector<int>& ids) {
    json arr = json::array();
    for (int v : ids) arr.push_back(v + 1);
    return arr;
}

std::string rational_text(const Rational& q) { return q.str(); }

Dag load_dag(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dag(in);
}

CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_cnf(in);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

json base_payload(const std::string& command, const std::string& input) {
    return json{{"schema", 1}, {"command", command}, {"input", input}};
}

CommandResult finish(bool json_mode, int exit_code, std::string human, const json& payload) {
    CommandResult result;
    result.exit_code = exit_code;
    result.human_text = std::move(human);
    if (json_mode) result.json_payload = payload.dump(2);
    return result;
}

json stats_json(const SolveStats& stats) {
    return json{{"nodes", stats.nodes},
                {"seconds", stats.seconds},
                {"lower_bound", stats.lower_bound},
                {"upper_bound", stats.upper_bound},
                {"method", stats.method}};
}

CommandResult run_check(bool json_mode, const std::string& path) {
    Dag d = load_dag(path);
    std::optional<Membership> mem = membership(d);
    json j = base_payload("check", path);
    if (!mem) {
        j["status"] = "not-in-d";
        return finish(json_mode, 1, "not in D", j);
    }
    j["status"] = "in-d";
    j["witness"] = mem->witness;
    j["stats"] = {{"lr_optimum", rational_text(mem->lr_optimum)}, {"k_ub", mem->k_ub}};
    return finish(json_mode, 0, "in D, witness " + join_labels(mem->witness), j);
}

CommandResult run_bound(bool json_mode, const std::string& path) {
    Dag d = load_dag(path);
    CliqueBound cb = clique_lower_bound(d);
    long long omega = omega_bound(d);
    LpSolution lr = simplex_solve(build_lr(d));
    std::optional<Rational> lr_optimum;
    if (lr.status == LpStatus::Optimal) lr_optimum = lr.value;

    long long best = std::max({static_cast<long long>(1), cb.value, omega});
    std::optional<long long> lr_bound;
    if (lr_optimum) {
        lr_bound = to_long_long(ceil_rational(*lr_optimum));
        best = std::max(best, *lr_bound);
    }

    std::ostringstream human;
    json j = base_payload("bound", path);
    j["status"] = "ok";
    json jb;
    if (cb.clique.empty()) {
        human << "clique bound " << cb.value << " (no multi-vertex clique)\n";
        jb["clique"] = {{"value", cb.value}, {"truncated", cb.truncated}};
    } else {
        std::vector<int> ids = cb.clique;
        std::sort(ids.begin(), ids.end());
        human << "clique bound " << cb.value << " (clique";
        for (int v : ids) human << ' ' << v + 1;
        human << ", first " << cb.q_first + 1 << ", last " << cb.q_last + 1 << ")";
        if (cb.truncated) human << " (truncated enumeration)";
        human << '\n';
        jb["clique"] = {{"value", cb.value},
                        {"vertices", one_based(ids)},
                        {"first", cb.q_first + 1},
                        {"last", cb.q_last + 1},
                        {"truncated", cb.truncated}};
    }
    human << "omega bound " << omega << '\n';
    jb["omega"] = omega;
    if (lr_bound) {
        human << "lr bound " << *lr_bound << " (optimum " << rational_text(*lr_optimum) << ")\n";
        jb["lr"] = *lr_bound;
        jb["lr_optimum"] = rational_text(*lr_optimum);
    } else {
        human << "lr bound: infeasible (not in D)\n";
        jb["lr"] = nullptr;
    }
    human << "best lower bound " << best;
    jb["best"] = best;
    j["bounds"] = jb;
    return finish(json_mode, 0, human.str(), j);
}

CommandResult run_solve(bool json_mode, const std::string& path, const SolveOptions& opts) {
    Dag d = load_dag(path);
    SolveResult r = compute_eta_t(d, opts);
    json j = base_payload("solve", path);
    j["stats"] = stats_json(r.stats);
    switch (r.status) {
        case SolveStatus::Solved:
            j["status"] = "solved";
            j["eta_t"] = r.eta_t;
            j["witness"] = r.witness;
            return finish(json_mode, 0,
                          "eta_t = " + std::to_string(r.eta_t) + ", witness " + join_labels(r.witness),
                          j);
        case SolveStatus::NotInD:
            j["status"] = "not-in-d";
            return finish(json_mode, 1, "not in D", j);
        case SolveStatus::BudgetExceeded:
        default:
            j["status"] = "budget-exceeded";
            return finish(json_mode, 3, "budget exceeded", j);
    }
}

CommandResult run_decide(bool json_mode, const std::string& path, long long k,
                         const SolveOptions& opts) {
    Dag d = load_dag(path);
    DecideResult r = decide_k(d, k, opts);
    json j = base_payload("decide", path);
    j["k"] = k;
    j["stats"] = {{"nodes", r.nodes}, {"seconds", r.seconds}};
    std::string prefix = "k = " + std::to_string(k) + ": ";
    switch (r.status) {
        case DecideStatus::Found:
            j["status"] = "found";
            j["witness"] = r.witness;
            return finish(json_mode, 0, prefix + "found, witness " + join_labels(r.witness), j);
        case DecideStatus::None:
            j["status"] = "none";
            return finish(json_mode, 1, prefix + "none", j);
        case DecideStatus::BudgetExceeded:
        default:
            j["status"] = "budget-exceeded";
            return finish(json_mode, 3, prefix + "budget exceeded", j);
    }
}

CommandResult run_oracle(bool json_mode, const std::string& path, long long kmax) {
    Dag d = load_dag(path);
    oracle::BruteForceResult r = oracle::brute_force_eta(d, kmax);
    json j = base_payload("oracle", path);
    j["k_max"] = kmax;
    j["stats"] = {{"enumerated", r.enumerated}};
    if (r.solved) {
        j["status"] = "solved";
        j["eta_t"] = r.k;
        j["witness"] = r.witness;
        return finish(json_mode, 0,
                      "eta_t = " + std::to_string(r.k) + ", witness " + join_labels(r.witness) +
                          "\nenumerated " + std::to_string(r.enumerated),
                      j);
    }
    j["status"] = "not-solved";
    return finish(json_mode, 1,
                  "no numbering with max label " + std::to_string(kmax) + "\nenumerated " +
                      std::to_string(r.enumerated),
                  j);
}

CommandResult run_tu(bool json_mode, const std::string& path, bool with_oracle) {
    Dag d = load_dag(path);
    bool tu = is_tu_structural(d);
    json j = base_payload("tu", path);
    j["status"] = tu ? "tu" : "not-tu";
    std::string human = tu ? "TU (underlying graph complete)" : "not TU (underlying graph not complete)";
    if (with_oracle) {
        std::optional<oracle::TuViolation> v = oracle::tu_subdeterminant(build_ipf_matrix(d));
        if (v.has_value() == tu)
            throw std::logic_error("structural test and subdeterminant scan disagree");
        if (v) {
            human += "\nviolation det " + std::to_string(v->det) + " rows";
            for (int r : v->rows) human += ' ' + std::to_string(r + 1);
            human += " cols";
            for (int c : v->cols) human += ' ' + std::to_string(c + 1);
            j["oracle"] = {{"det", v->det}, {"rows", one_based(v->rows)}, {"cols", one_based(v->cols)}};
        } else {
            human += "\noracle scan agrees";
            j["oracle"] = {{"agrees", true}};
        }
    }
    return finish(json_mode, tu ? 0 : 1, human, j);
}

CommandResult run_reduce(bool json_mode, const std::string& path, const std::string& out_path,
                         const std::string& map_path) {
    CnfFormula phi = load_cnf(path);
    CnfFormula norm = normalize_clauses(phi);
    auto [d, map] = build_dphi(norm);
    json j = base_payload("reduce", path);
    j["status"] = "ok";
    j["stats"] = {{"vertices", d.num_vertices()},
                  {"arcs", d.num_arcs()},
                  {"variables", norm.num_vars},
                  {"original_variables", norm.num_original_vars},
                  {"clauses", norm.clauses.size()}};
    std::ostringstream human;
    human << "vertices " << d.num_vertices() << ", arcs " << d.num_arcs();
    if (!out_path.empty()) {
        write_file(out_path, d.to_text());
        human << "\nwrote " << out_path;
        j["out"] = out_path;
    } else {
        human << '\n' << d.to_text();
        j["dag_text"] = d.to_text();
    }
    if (!map_path.empty()) {
        write_file(map_path, map_to_text(map));
        human << "\nwrote " << map_path;
        j["map"] = map_path;
    }
    return finish(json_mode, 0, human.str(), j);
}

CommandResult run_verify(bool json_mode, const std::string& path, const Labeling& witness) {
    Dag d = load_dag(path);
    bool ok = false;
    try {
        ok = is_topological_additive(d, witness);
    } catch (const std::invalid_argument&) {
        ok = false;  // wrong size or nonpositive labels: certainly not a numbering
    }
    json j = base_payload("verify", path);
    j["status"] = ok ? "valid" : "invalid";
    j["witness"] = witness;
    return finish(json_mode, ok ? 0 : 1, ok ? "valid numbering" : "invalid numbering", j);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"topological additive numbering toolkit"};
    app.name("tan");
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a machine-readable JSON payload");

    std::string dag_path, cnf_path, out_path, map_path;
    long long k_value = 0;
    long long kmax = 8;
    SolveOptions defaults;
    std::uint64_t budget_nodes = defaults.max_nodes;
    double budget_secs = defaults.max_seconds;
    bool with_oracle = false;
    std::vector<long long> witness;

    CLI::App* check = app.add_subcommand("check", "decide membership in the feasible class D");
    check->add_option("dag", dag_path, "digraph file")->required();

    CLI::App* bound = app.add_subcommand("bound", "report the lower bounds");
    bound->add_option("dag", dag_path, "digraph file")->required();

    CLI::App* solve = app.add_subcommand("solve", "compute eta_t and a witness");
    solve->add_option("dag", dag_path, "digraph file")->required();
    solve->add_option("--budget-nodes", budget_nodes, "search node budget");
    solve->add_option("--budget-secs", budget_secs, "search time budget in seconds");

    CLI::App* decide = app.add_subcommand("decide", "decide whether a k-numbering exists");
    decide->add_option("dag", dag_path, "digraph file")->required();
    decide->add_option("--k", k_value, "max label")->required();
    decide->add_option("--budget-nodes", budget_nodes, "search node budget");
    decide->add_option("--budget-secs", budget_secs, "search time budget in seconds");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force eta_t");
    oracle_cmd->add_option("dag", dag_path, "digraph file")->required();
    oracle_cmd->add_option("--kmax", kmax, "largest max label to try");

    CLI::App* tu = app.add_subcommand("tu", "total unimodularity of the constraint matrix");
    tu->add_option("dag", dag_path, "digraph file")->required();
    tu->add_flag("--oracle", with_oracle, "verify with the exhaustive subdeterminant scan");

    CLI::App* reduce = app.add_subcommand("reduce", "build the hardness-reduction digraph from a 3-CNF");
    reduce->add_option("cnf", cnf_path, "CNF file")->required();
    reduce->add_option("--out", out_path, "write the digraph here");
    reduce->add_option("--map", map_path, "write the gadget map here");

    CLI::App* verify = app.add_subcommand("verify", "check a labeling against a digraph");
    verify->add_option("dag", dag_path, "digraph file")->required();
    verify->add_option("--witness", witness, "labels in vertex id order")->required()->expected(-1);

    for (CLI::App* sub : {check, bound, solve, decide, oracle_cmd, tu, reduce, verify})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), std::nullopt};
    } catch (const CLI::ParseError& e) {
        CommandResult result;
        result.exit_code = 2;
        result.human_text = std::string("error: ") + e.what();
        if (json_mode) {
            json j = base_payload("", "");
            j["status"] = "error";
            j["error"] = e.what();
            result.json_payload = j.dump(2);
        }
        return result;
    }

    SolveOptions opts;
    opts.max_nodes = budget_nodes;
    opts.max_seconds = budget_secs;

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (check->parsed()) return run_check(json_mode, dag_path);
        if (bound->parsed()) return run_bound(json_mode, dag_path);
        if (solve->parsed()) return run_solve(json_mode, dag_path, opts);
        if (decide->parsed()) return run_decide(json_mode, dag_path, k_value, opts);
        if (oracle_cmd->parsed()) return run_oracle(json_mode, dag_path, kmax);
        if (tu->parsed()) return run_tu(json_mode, dag_path, with_oracle);
        if (reduce->parsed()) return run_reduce(json_mode, cnf_path, out_path, map_path);
        if (verify->parsed()) return run_verify(json_mode, dag_path, witness);
        throw std::logic_error("unreachable: subcommand required");
    } catch (const std::exception& e) {
        CommandResult result;
        result.exit_code = 2;
        result.human_text = std::string("error: ") + e.what();
        if (json_mode) {
            json j = base_payload(command, dag_path.empty() ? cnf_path : dag_path);
            j["status"] = "error";
            j["error"] = e.what();
            result.json_payload = j.dump(2);
        }
        return result;
    }
}

}  // namespace tanum::cli
