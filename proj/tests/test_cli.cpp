#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "latgm/io.hpp"

#include "fixtures.hpp"

using namespace latgm;
using latgm::io::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LATGM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) out.append(buffer, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LATGM_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/latgm_test_") + std::to_string(getpid()) + "_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli exit code contract") {
    CHECK(run_cli("lattice check-natural " + data("fig1_lattice.json")).exit_code == 0);
    // unnatural lattice: false verdict
    const std::string fig2 = write_temp("fig2.json",
        R"({"m": 4, "sets": ["", "1,2", "3", "4", "3,4", "1,2,3", "1,2,4", "1,2,3,4"]})");
    CHECK(run_cli("lattice check-natural " + fig2).exit_code == 1);
    // missing file and malformed input: input errors
    CHECK(run_cli("lattice check-natural /nonexistent.json").exit_code == 2);
    const std::string bad = write_temp("bad.json", R"({"m": 2, "sets": ["1"], "extra": 1})");
    CHECK(run_cli("lattice check-natural " + bad).exit_code == 2);
    // usage error
    CHECK(run_cli("lattice no-such-command").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli lattice pipeline round-trips through files") {
    const auto lattice = run_cli("--json lattice from-poset " + data("fig1_poset.json"));
    REQUIRE(lattice.exit_code == 0);
    const DistributiveLattice l = io::parse_lattice(io::parse_text(lattice.out));
    CHECK(l.elements() == fixtures::fig1_lattice_sets());

    const std::string lattice_file = write_temp("lattice.json", lattice.out);
    CHECK(run_cli("lattice check-natural " + lattice_file).exit_code == 0);

    const auto graph = run_cli("--json lattice minimal-graph " + lattice_file);
    REQUIRE(graph.exit_code == 0);
    CHECK(io::parse_graph(io::parse_text(graph.out)) == fixtures::path4());

    const auto closure = run_cli("--json lattice closure " + lattice_file);
    REQUIRE(closure.exit_code == 0);
    CHECK(io::parse_lattice(io::parse_text(closure.out)) == l);
}

TEST_CASE("cli graph commands") {
    const auto cliques_out = run_cli("--json graph cliques " + data("fourcycle.json"));
    REQUIRE(cliques_out.exit_code == 0);
    const json j = io::parse_text(cliques_out.out);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("all").size() == 9);
    CHECK(j.at("maximal").size() == 4);

    const auto comp = run_cli("--json graph comparability " + data("fig1_poset.json"));
    REQUIRE(comp.exit_code == 0);
    CHECK(io::parse_graph(io::parse_text(comp.out)) == fixtures::path4());
}

TEST_CASE("cli ci commands") {
    const auto pw = run_cli("--json ci pairwise " + data("fourcycle.json"));
    REQUIRE(pw.exit_code == 0);
    const json j = io::parse_text(pw.out);
    CHECK(j.at("statements").size() == 2);
    CHECK(j.at("binomials").size() == 8);

    const auto gl = run_cli("--json ci global " + data("fourcycle.json"));
    CHECK(io::parse_text(gl.out).at("statements").size() == 2);

    CHECK(run_cli("ci check " + data("master_dist.json") + " " + data("fourcycle.json")).exit_code ==
          0);
    CHECK(run_cli("ci check --global " + data("master_dist.json") + " " +
                  data("fourcycle.json")).exit_code == 0);

    // perturb one coordinate: some pairwise binomial must fail
    auto values = fixtures::master_distribution().values();
    values[SubsetMask::of({1, 3})] = Rat(1, 5);
    const std::string broken =
        write_temp("broken.json", io::to_json(Distribution(4, values)).dump());
    const auto res = run_cli("ci check " + broken + " " + data("fourcycle.json"));
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("FAILURES") != std::string::npos);
}

TEST_CASE("cli param commands") {
    const auto matrix = run_cli("--json param matrix --matrix AG " + data("fourcycle.json"));
    REQUIRE(matrix.exit_code == 0);
    const json j = io::parse_text(matrix.out);
    CHECK(j.at("rows").size() == 16);
    CHECK(j.at("cols").size() == 16);

    const auto hibi = run_cli("--json param matrix --matrix HIBI " + data("fig1_lattice.json"));
    REQUIRE(hibi.exit_code == 0);
    CHECK(io::parse_text(hibi.out).at("rows").size() == 5);

    const auto feas = run_cli("--json param feasible --matrix AG " + data("fourcycle.json") +
                              " --support " + data("fig1_lattice.json"));
    REQUIRE(feas.exit_code == 0);
    CHECK(io::parse_text(feas.out).at("feasible") == true);
    CHECK(io::parse_text(feas.out).at("h_rows").size() == 3);

    CHECK(run_cli("param feasible --matrix AG " + data("fourcycle.json") + " --support " +
                  data("support_T.json")).exit_code == 1);
    CHECK(run_cli("param feasible --matrix BG " + data("fourcycle.json") + " --support " +
                  data("fig1_lattice.json")).exit_code == 1);

    CHECK(run_cli("param facial --matrix AG " + data("fourcycle.json") + " --support " +
                  data("support_T.json")).exit_code == 0);

    const auto realized = run_cli("--json param realize --matrix AG " + data("fourcycle.json") +
                                  " --support " + data("fig1_lattice.json") + " --seed 11");
    REQUIRE(realized.exit_code == 0);
    const Distribution d = io::parse_distribution(io::parse_text(realized.out));
    CHECK(d.support() == fixtures::fig1_lattice_sets());
    // determinism across runs
    const auto realized2 = run_cli("--json param realize --matrix AG " + data("fourcycle.json") +
                                   " --support " + data("fig1_lattice.json") + " --seed 11");
    CHECK(realized.out == realized2.out);

    CHECK(run_cli("param realize --matrix AG " + data("fourcycle.json") + " --support " +
                  data("support_T.json")).exit_code == 1);
}

TEST_CASE("cli factorize, verify, and the certificate file") {
    const auto cert_run = run_cli("--json factorize " + data("master_dist.json") + " " +
                                  data("fourcycle.json"));
    REQUIRE(cert_run.exit_code == 0);
    const json cert_json = io::parse_text(cert_run.out);
    CHECK(cert_json.at("clique_params").size() == 9);
    CHECK(cert_json.at("dependent_trace").size() == 2);

    const std::string cert_file = write_temp("cert.json", cert_run.out);
    CHECK(run_cli("verify " + cert_file + " " + data("master_dist.json") + " " +
                  data("fourcycle.json")).exit_code == 0);

    // a perturbed dependent coordinate: violation with certificate, exit 1
    auto values = fixtures::master_distribution().values();
    values[SubsetMask::of({1, 2, 3, 4})] = Rat(1, 5);
    const std::string broken =
        write_temp("broken2.json", io::to_json(Distribution(4, values)).dump());
    const auto violation = run_cli("--json factorize " + broken + " " + data("fourcycle.json"));
    CHECK(violation.exit_code == 1);
    const json vj = io::parse_text(violation.out);
    CHECK(vj.at("violation").at("set") == "1,2,3,4");

    // unnatural support is an input error
    const std::string fig2_dist = write_temp("fig2_dist.json",
        io::to_json(fixtures::fig2_witness()).dump());
    CHECK(run_cli("factorize " + fig2_dist + " " + data("fourcycle.json")).exit_code == 2);

    // tampered certificate: verify says invalid
    json tampered = cert_json;
    tampered["clique_params"][""] = "1";
    const std::string tampered_file = write_temp("tampered.json", tampered.dump());
    CHECK(run_cli("verify " + tampered_file + " " + data("master_dist.json") + " " +
                  data("fourcycle.json")).exit_code == 1);
}

TEST_CASE("cli hibi and oracle commands") {
    const auto gens = run_cli("--json hibi gens " + data("fig1_lattice.json"));
    REQUIRE(gens.exit_code == 0);
    CHECK(io::parse_text(gens.out).at("generators").size() == 5);

    CHECK(run_cli("hibi check-equality " + data("fig1_lattice.json") + " " +
                  data("path4.json")).exit_code == 0);
    // the saturated model differs from the Hibi ideal
    const std::string boolean2 = write_temp("b2.json", R"({"m": 2, "sets": ["", "1", "2", "1,2"]})");
    const std::string k2 = write_temp("k2.json", R"({"m": 2, "edges": [[1,2]]})");
    CHECK(run_cli("hibi check-equality " + boolean2 + " " + k2).exit_code == 1);

    CHECK(run_cli("oracle counterexample").exit_code == 0);
    const auto sweep = run_cli("--json oracle sweep --trials 4 --seed 5");
    REQUIRE(sweep.exit_code == 0);
    CHECK(io::parse_text(sweep.out).at("ok") == true);
    // determinism
    const auto sweep2 = run_cli("--json oracle sweep --trials 4 --seed 5");
    CHECK(sweep.out == sweep2.out);
}
