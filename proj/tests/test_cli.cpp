#include "doctest.h"

#include "tanum/cli.hpp"
#include "tanum/dag.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>

using namespace tanum;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("tanum-cli-" + name);
    std::ofstream out(path);
    out << text;
    return path.string();
}

std::string k3_path() { return write_temp("k3.dag", "p dag 3 3\na 1 2\na 1 3\na 2 3\n"); }
std::string p3_path() { return write_temp("p3.dag", "p dag 3 2\na 1 2\na 2 3\n"); }
std::string vee_path() { return write_temp("vee.dag", "p dag 3 2\na 1 3\na 2 3\n"); }

}  // namespace

TEST_CASE("solve command") {
    cli::CommandResult r = cli::run({"solve", k3_path()});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "eta_t = 3, witness 3 2 1");
    CHECK_FALSE(r.json_payload.has_value());

    r = cli::run({"solve", p3_path()});
    CHECK(r.exit_code == 1);
    CHECK(r.human_text == "not in D");
}

TEST_CASE("solve command with json output") {
    cli::CommandResult r = cli::run({"--json", "solve", k3_path()});
    CHECK(r.exit_code == 0);
    REQUIRE(r.json_payload.has_value());
    json j = json::parse(*r.json_payload);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "solve");
    CHECK(j["status"] == "solved");
    CHECK(j["eta_t"] == 3);
    CHECK(j["witness"] == json::array({3, 2, 1}));
    CHECK(j["stats"]["method"] == "complete-multipartite");

    // the global flag falls through to the subcommand position
    cli::CommandResult tail = cli::run({"solve", k3_path(), "--json"});
    CHECK(tail.exit_code == 0);
    REQUIRE(tail.json_payload.has_value());
    CHECK(json::parse(*tail.json_payload)["eta_t"] == 3);
}

TEST_CASE("check command") {
    cli::CommandResult r = cli::run({"check", k3_path()});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "in D, witness 3 2 1");

    r = cli::run({"--json", "check", p3_path()});
    CHECK(r.exit_code == 1);
    CHECK(r.human_text == "not in D");
    CHECK(json::parse(*r.json_payload)["status"] == "not-in-d");

    // fractional relaxation optimum survives the round trip as a string
    std::string k22 = write_temp("k22.dag", "p dag 4 4\na 1 3\na 1 4\na 2 3\na 2 4\n");
    r = cli::run({"--json", "check", k22});
    CHECK(r.exit_code == 0);
    json j = json::parse(*r.json_payload);
    CHECK(j["stats"]["lr_optimum"] == "3/2");
    CHECK(j["stats"]["k_ub"] == 3);
    CHECK(j["witness"] == json::array({3, 3, 2, 2}));
}

TEST_CASE("bound command") {
    cli::CommandResult r = cli::run({"bound", k3_path()});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text ==
          "clique bound 3 (clique 1 2 3, first 1, last 3)\n"
          "omega bound 3\n"
          "lr bound 3 (optimum 3)\n"
          "best lower bound 3");

    // bounds are reported even off membership; here they are vacuous
    r = cli::run({"--json", "bound", p3_path()});
    CHECK(r.exit_code == 0);
    json j = json::parse(*r.json_payload);
    CHECK(j["bounds"]["lr"].is_null());
    CHECK(j["bounds"]["omega"] == 1);
    CHECK(j["bounds"]["clique"]["value"] == 3);  // edge {2,3}: ceil((2+1)/1)
    CHECK(j["bounds"]["best"] == 3);
    CHECK(r.human_text.find("lr bound: infeasible (not in D)") != std::string::npos);
}

TEST_CASE("decide command") {
    cli::CommandResult r = cli::run({"decide", k3_path(), "--k", "2"});
    CHECK(r.exit_code == 1);
    CHECK(r.human_text == "k = 2: none");

    r = cli::run({"decide", k3_path(), "--k", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "k = 3: found, witness 3 2 1");

    r = cli::run({"decide", k3_path(), "--k", "3", "--budget-nodes", "0"});
    CHECK(r.exit_code == 3);
    CHECK(r.human_text == "k = 3: budget exceeded");

    // --k is required
    CHECK(cli::run({"decide", k3_path()}).exit_code == 2);
}

TEST_CASE("oracle command") {
    cli::CommandResult r = cli::run({"--json", "oracle", k3_path(), "--kmax", "8"});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "eta_t = 3, witness 3 2 1\nenumerated 31");
    json j = json::parse(*r.json_payload);
    CHECK(j["status"] == "solved");
    CHECK(j["stats"]["enumerated"] == 31);

    r = cli::run({"oracle", p3_path()});
    CHECK(r.exit_code == 1);
    CHECK(r.human_text == "no numbering with max label 8\nenumerated 1296");
}

TEST_CASE("tu command") {
    cli::CommandResult r = cli::run({"tu", k3_path()});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "TU (underlying graph complete)");

    r = cli::run({"tu", k3_path(), "--oracle"});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text == "TU (underlying graph complete)\noracle scan agrees");

    r = cli::run({"--json", "tu", vee_path(), "--oracle"});
    CHECK(r.exit_code == 1);
    CHECK(r.human_text ==
          "not TU (underlying graph not complete)\nviolation det 2 rows 1 3 4 cols 1 2 4");
    json j = json::parse(*r.json_payload);
    CHECK(j["status"] == "not-tu");
    CHECK(j["oracle"]["det"] == 2);
    CHECK(j["oracle"]["rows"] == json::array({1, 3, 4}));
    CHECK(j["oracle"]["cols"] == json::array({1, 2, 4}));
}

TEST_CASE("reduce command") {
    std::string cnf = write_temp("one.cnf", "p cnf 3 1\n1 2 3 0\n");
    cli::CommandResult r = cli::run({"reduce", cnf});
    CHECK(r.exit_code == 0);
    CHECK(r.human_text.substr(0, 34) == "vertices 45, arcs 44\np dag 45 44\na");

    auto out = std::filesystem::temp_directory_path() / "tanum-cli-dphi.dag";
    auto mapfile = std::filesystem::temp_directory_path() / "tanum-cli-dphi.map";
    r = cli::run({"--json", "reduce", cnf, "--out", out.string(), "--map", mapfile.string()});
    CHECK(r.exit_code == 0);
    json j = json::parse(*r.json_payload);
    CHECK(j["stats"]["vertices"] == 45);
    CHECK(j["stats"]["arcs"] == 44);
    CHECK(j["stats"]["variables"] == 3);
    CHECK(j["stats"]["clauses"] == 1);

    std::ifstream in(out);
    REQUIRE(in.good());
    Dag d = parse_dag(in);
    CHECK(d.num_vertices() == 45);
    CHECK(d.num_arcs() == 44);

    std::ifstream map_in(mapfile);
    int lines = 0;
    for (std::string line; std::getline(map_in, line);) ++lines;
    CHECK(lines == 45);

    // normalization happens before the gadgets are laid out
    std::string repeat = write_temp("repeat.cnf", "p cnf 1 1\n1 1 1 0\n");
    r = cli::run({"--json", "reduce", repeat});
    j = json::parse(*r.json_payload);
    CHECK(j["stats"]["variables"] == 3);
    CHECK(j["stats"]["original_variables"] == 1);
    CHECK(j["stats"]["clauses"] == 4);
    CHECK(j["stats"]["vertices"] == 13 * 3 + 6 * 4);
    CHECK(j["stats"]["arcs"] == 12 * 3 + 8 * 4);
}

TEST_CASE("verify command") {
    CHECK(cli::run({"verify", k3_path(), "--witness", "3", "2", "1"}).exit_code == 0);
    CHECK(cli::run({"verify", k3_path(), "--witness", "3", "2", "1"}).human_text ==
          "valid numbering");
    CHECK(cli::run({"verify", k3_path(), "--witness", "1", "2", "3"}).exit_code == 1);
    CHECK(cli::run({"verify", k3_path(), "--witness", "1", "2"}).exit_code == 1);
    CHECK(cli::run({"verify", k3_path(), "--witness", "0", "0", "0"}).exit_code == 1);

    cli::CommandResult r = cli::run({"--json", "verify", k3_path(), "--witness", "3", "2", "1"});
    json j = json::parse(*r.json_payload);
    CHECK(j["status"] == "valid");
    CHECK(j["witness"] == json::array({3, 2, 1}));
}

TEST_CASE("solve output feeds verify") {
    cli::CommandResult solved = cli::run({"--json", "solve", k3_path()});
    json j = json::parse(*solved.json_payload);
    std::vector<std::string> args{"verify", k3_path(), "--witness"};
    for (const auto& label : j["witness"]) args.push_back(label.dump());
    CHECK(cli::run(args).exit_code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(cli::run({}).exit_code == 2);
    CHECK(cli::run({"frobnicate", "x.dag"}).exit_code == 2);
    CHECK(cli::run({"solve"}).exit_code == 2);
    CHECK(cli::run({"solve", "/nonexistent/x.dag"}).exit_code == 2);

    std::string bad = write_temp("bad.dag", "p dag 2 1\na 1 9\n");
    cli::CommandResult r = cli::run({"--json", "solve", bad});
    CHECK(r.exit_code == 2);
    REQUIRE(r.json_payload.has_value());
    json j = json::parse(*r.json_payload);
    CHECK(j["status"] == "error");
    CHECK(j["error"].is_string());

    // disconnected digraphs are an input error for solve
    std::string split = write_temp("split.dag", "p dag 4 2\na 1 2\na 3 4\n");
    CHECK(cli::run({"solve", split}).exit_code == 2);
}

TEST_CASE("help text lists the subcommands") {
    cli::CommandResult r = cli::run({"--help"});
    CHECK(r.exit_code == 0);
    for (const char* name : {"check", "bound", "solve", "decide", "oracle", "tu", "reduce", "verify"})
        CHECK(r.human_text.find(name) != std::string::npos);
}
