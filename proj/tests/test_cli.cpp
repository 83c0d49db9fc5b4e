#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "dbldom/cli.hpp"
#include "dbldom/families.hpp"

using namespace dbldom;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("dbldom_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute on the Figure 3 graph") {
    const Run fam = run({"family", "figure3", "--format", "edgelist"});
    REQUIRE(fam.code == 0);
    const std::string path = temp_path("fig3.txt");
    std::ofstream(path) << fam.out;

    const Run r = run({"compute", path, "--params", "gamma,gamma2,gamma_x2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["parameters"][0]["value"] == 2);
    CHECK(doc["parameters"][1]["value"] == 4);
    CHECK(doc["parameters"][2]["value"] == 6);
    std::filesystem::remove(path);
}

TEST_CASE("compute exit codes") {
    const Run isolated = run({"compute", "-", "--params", "gamma_x2"}, "3 1\n0 1\n");
    CHECK(isolated.code == cli::kInfeasible);
    CHECK(isolated.err.find("isolated vertex present") != std::string::npos);

    const Run parse = run({"compute", "-"}, "3 2\n0 1\n1 z\n");
    CHECK(parse.code == cli::kInputError);
    CHECK(parse.err.find("line 3, column 3") != std::string::npos);

    CHECK(run({"compute", "/nonexistent/graph.txt"}).code == cli::kInputError);
    CHECK(run({"compute", "-", "--params", "delta"}, "Bw\n").code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("alpha plus beta equals n through the CLI") {
    const Run r = run({"compute", "-", "--params", "alpha,beta", "--format", "json"}, "I?qa`hUW?\n");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["parameters"][0]["value"].get<int>() + doc["parameters"][1]["value"].get<int>() == doc["n"]);
}

TEST_CASE("certify") {
    const Run k5 = run({"family", "complete", "--n", "5"});
    const Run ok = run({"certify", "-", "--theorem", "alpha-gamma", "--format", "json"}, k5.out);
    REQUIRE(ok.code == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["size"] == 2);
    CHECK(doc["size_bound"] == 2);
    CHECK(doc["verdict"] == "OK");

    const Run star = run({"family", "star", "--n", "5"});
    const Run claw = run({"certify", "-", "--theorem", "total-gamma"}, star.out);
    CHECK(claw.code == cli::kInfeasible);
    CHECK(claw.err.find("not claw-free") != std::string::npos);

    const Run h42 = run({"family", "H", "--t", "4", "--r", "2", "--format", "edgelist"});
    const Run beta = run({"certify", "-", "--theorem", "beta-gamma"}, h42.out);
    CHECK(beta.code == 0);
    CHECK(beta.out.find("|W'| = 8, bound = 8") != std::string::npos);
    CHECK(beta.out.find("verdict: OK") != std::string::npos);

    CHECK(run({"certify", "-", "--theorem", "nope"}, k5.out).code == cli::kInputError);
}

TEST_CASE("verify modes") {
    const std::string path = temp_path("report.json");
    const Run ex = run({"verify", "exhaustive", "5", "--out", path, "--jobs", "2"});
    CHECK(ex.code == 0);
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["meta"]["graphs_checked"] == 1024);
    std::filesystem::remove(path);

    const Run sweep = run({"verify", "family-sweep"});
    CHECK(sweep.code == 0);
    const auto sweep_doc = nlohmann::json::parse(sweep.out);
    CHECK(sweep_doc["families"].size() == 15 + 3);
    for (const auto& row : sweep_doc["families"]) CHECK(row["mismatches"].empty());

    const Run a = run({"verify", "random", "10", "100", "0.5", "42"});
    const Run b = run({"verify", "random", "10", "100", "1/2", "42", "--jobs", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const Run trees = run({"verify", "trees", "8", "50", "--seed", "3"});
    CHECK(trees.code == 0);
    CHECK(nlohmann::json::parse(trees.out)["meta"]["seed"] == 3);

    CHECK(run({"verify", "exhaustive", "9"}).code == cli::kInfeasible);
    CHECK(run({"verify", "random", "20", "10", "0.5", "1"}).code == cli::kInfeasible);
    CHECK(run({"verify", "random", "10", "10", "half", "1"}).code == cli::kInputError);
    CHECK(run({"verify", "sideways"}).code == cli::kInputError);
}

TEST_CASE("family output formats") {
    const Run g6 = run({"family", "H", "--t", "4", "--r", "2", "--format", "graph6"});
    REQUIRE(g6.code == 0);
    std::istringstream lines(g6.out);
    std::string line;
    int graph_lines = 0;
    std::string code;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#') {
            ++graph_lines;
            code = line;
        }
    }
    CHECK(graph_lines == 1);
    CHECK(graph6_decode(code).order() == 10);

    const Run el = run({"family", "Hprime", "--r", "2", "--format", "edgelist"});
    CHECK(el.out.find("\n9 12\n") != std::string::npos);

    CHECK(run({"family", "H", "--t", "2", "--r", "2"}).code == cli::kInfeasible);
    CHECK(run({"family", "dodecahedron"}).code == cli::kInputError);

    const Run js = run({"family", "figure3", "--format", "json"});
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["expected"]["gamma_x2"] == 6);
    CHECK(doc["edges"].size() == 17);
}

TEST_CASE("family output re-read by compute reproduces the expected values") {
    const std::vector<std::vector<std::string>> specs = {
        {"H", "--t", "5", "--r", "3"}, {"Hprime", "--r", "3"}, {"complete", "--n", "6"},
        {"star", "--n", "7"},          {"figure3"}};
    for (const auto& spec : specs) {
        for (const char* format : {"graph6", "edgelist"}) {
            std::vector<std::string> args{"family"};
            args.insert(args.end(), spec.begin(), spec.end());
            args.insert(args.end(), {"--format", format});
            const Run fam = run(args);
            REQUIRE(fam.code == 0);

            std::vector<std::pair<std::string, int>> expected;
            std::istringstream lines(fam.out);
            std::string line;
            while (std::getline(lines, line)) {
                const std::string tag = "# expected ";
                if (line.rfind(tag, 0) != 0) continue;
                const auto eq = line.find(" = ");
                expected.emplace_back(line.substr(tag.size(), eq - tag.size()), std::stoi(line.substr(eq + 3)));
            }
            REQUIRE_FALSE(expected.empty());
            std::string params;
            for (const auto& [name, value] : expected) {
                if (name == "leaves" || name == "supports") continue;
                params += (params.empty() ? "" : ",") + name;
            }
            const Run comp = run({"compute", "-", "--params", params, "--format", "json"}, fam.out);
            REQUIRE(comp.code == 0);
            const auto doc = nlohmann::json::parse(comp.out);
            std::size_t k = 0;
            for (const auto& [name, value] : expected) {
                if (name == "leaves" || name == "supports") continue;
                CHECK(doc["parameters"][k]["name"] == name);
                CHECK(doc["parameters"][k]["value"] == value);
                ++k;
            }
        }
    }
}

TEST_CASE("json mode writes only the document to stdout") {
    const Run r = run({"compute", "-", "--format", "json"}, "3 1\n0 1\n");
    CHECK(r.code == cli::kInfeasible);
    CHECK(nlohmann::json::accept(r.out));
    CHECK_FALSE(r.err.empty());

    const Run chk = run({"check", "-", "--format", "json"}, "Bw\n");
    CHECK(chk.code == 0);
    CHECK(nlohmann::json::parse(chk.out)["checks"].size() == 11);
}

}
