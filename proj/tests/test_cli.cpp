// Drives the installed binary through popen and checks the emitted reports
// and exit codes; the binary path arrives via MWLAB_CLI, data files via
// MWLAB_DATA_DIR.
#include "mwlab/mwlab.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MWLAB_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string data(const std::string& name) {
    return std::string(MWLAB_DATA_DIR) + "/" + name;
}

mwlab::Json parse(const CliResult& res) {
    return mwlab::Json::parse(res.out);
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("cli reports the transform identity") {
    CliResult res = run_cli("verify-macwilliams " + data("rep3.json"));
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["verb"] == "verify-macwilliams");
    CHECK(j["pass"] == true);
    CHECK(j["results"]["primal"]["coeffs"] ==
          mwlab::Json::array({"1", "0", "0", "1"}));
    CHECK(j["results"]["transformed"] == j["results"]["dual_direct"]);
}

TEST_CASE("cli code info") {
    CliResult res = run_cli("code-info " + data("hamming7.json"));
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["results"]["q"] == 2);
    CHECK(j["results"]["n"] == 7);
    CHECK(j["results"]["k"] == 4);
    CHECK(j["results"]["size"] == "16");
    CHECK(j["results"]["dual_k"] == 3);
}

TEST_CASE("cli tuple enumerator") {
    CliResult one = run_cli("enum " + data("rep3.json"));
    REQUIRE(one.status == 0);
    mwlab::Json j1 = parse(one);
    CHECK(j1["results"]["m"] == 1);
    CHECK(j1["results"]["enumerator"]["coeffs"] ==
          mwlab::Json::array({"1", "0", "0", "1"}));
    CHECK(j1["results"]["total"] == "2");

    CliResult two = run_cli("enum " + data("rep3.json") + " " + data("rep3.json"));
    REQUIRE(two.status == 0);
    mwlab::Json j2 = parse(two);
    CHECK(j2["results"]["m"] == 2);
    CHECK(j2["results"]["enumerator"]["coeffs"] ==
          mwlab::Json::array({"1", "0", "0", "3"}));
}

TEST_CASE("cli full-space transform check") {
    CliResult res = run_cli("ft-check --q 4 --m 1 --n 2 --z 1/3");
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["points"] == 16);

    CHECK(run_cli("ft-check --q 6").status == 2);
}

TEST_CASE("cli poisson summation") {
    CliResult res = run_cli("poisson-check " + data("rep3.json") + " --seed 5");
    REQUIRE(res.status == 0);
    CHECK(parse(res)["pass"] == true);
}

TEST_CASE("cli distribution table is exact") {
    CliResult res = run_cli("dist " + data("selfdual2.json") + " --z 1/3 --coset");
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["results"]["probs"] == mwlab::Json::array({"5/8", "3/8"}));
    CHECK(j["results"]["support"].size() == 2);
}

TEST_CASE("cli smoothing threshold") {
    CliResult res = run_cli("smooth " + data("zero1.json") + " --eps 1/3 --tol 1/1000000");
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["lower_bound"] == "1/2");
}

TEST_CASE("cli coset uniformity bound") {
    CliResult res = run_cli("prop31 " + data("selfdual2.json") + " --z 1/3");
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["delta"] == "1/8");
    CHECK(j["results"]["bound"] == "1/8");
}

TEST_CASE("cli lattice series") {
    CliResult nu = run_cli("lattice-nu " + data("selfdual2.json") + " --z 1/3 --terms 6");
    REQUIRE(nu.status == 0);
    mwlab::Json jn = parse(nu);
    CHECK(jn["pass"] == true);
    CHECK(jn["results"]["counts"] ==
          mwlab::Json::array({"1", "0", "8", "0", "16", "0", "24"}));
    CHECK(jn["results"]["closed_form"] == "17/8");

    CliResult theta = run_cli("lattice-theta " + data("selfdual2.json") + " --terms 16");
    REQUIRE(theta.status == 0);
    mwlab::Json jt = parse(theta);
    CHECK(jt["pass"] == true);
    CHECK(jt["results"]["lattice_counts"] == jt["results"]["series_counts"]);
}

TEST_CASE("cli duality identity verb") {
    CliResult res = run_cli("theorem3 " + data("rep3.json") + " --u 1/2 --beta 1.0");
    REQUIRE(res.status == 0);
    mwlab::Json j = parse(res);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["exact"]["residual"] == "0");
    CHECK(j["results"]["exact"]["v"] == "1/3");
    double lhs = j["results"]["numeric"]["lhs"].get<double>();
    double rhs = j["results"]["numeric"]["rhs"].get<double>();
    CHECK_THAT(lhs, Catch::Matchers::WithinRel(rhs, 1e-9));

    CHECK(run_cli("theorem3 " + data("rep3.json")).status == 2);
}

TEST_CASE("cli gaussian identity verb") {
    CliResult res = run_cli("jacobi-poisson " + data("rep3.json") + " --t 1.0");
    REQUIRE(res.status == 0);
    CHECK(parse(res)["pass"] == true);

    CliResult dual = run_cli("jacobi-poisson " + data("selfdual2.json") + " --dual --t 0.7");
    REQUIRE(dual.status == 0);
    CHECK(parse(dual)["pass"] == true);
}

TEST_CASE("cli suite runs are deterministic per seed") {
    CliResult a = run_cli("suite verify-macwilliams --count 3 --seed 11");
    CliResult b = run_cli("suite verify-macwilliams --count 3 --seed 11");
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    CHECK(a.out == b.out);
    mwlab::Json j = parse(a);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["passes"] == 3);

    for (const char* verb : {"prop31", "theorem3-exact", "poisson-check"}) {
        CliResult r = run_cli(std::string("suite ") + verb + " --count 2 --seed 3");
        REQUIRE(r.status == 0);
        CHECK(parse(r)["pass"] == true);
    }

    CHECK(run_cli("suite no-such-suite --count 1").status == 2);
}

TEST_CASE("cli csv output flattens the report") {
    CliResult res = run_cli("dist " + data("selfdual2.json") + " --z 1/3 --coset --out csv");
    REQUIRE(res.status == 0);
    CHECK(res.out.find("verb,dist\n") != std::string::npos);
    CHECK(res.out.find("results.probs,5/8;3/8\n") != std::string::npos);
    CHECK(res.out.find("{") == std::string::npos);
}

TEST_CASE("cli timing is opt in") {
    CliResult with = run_cli("code-info " + data("rep3.json") + " --timing");
    REQUIRE(with.status == 0);
    CHECK(parse(with).contains("timing_ms"));

    CliResult without = run_cli("code-info " + data("rep3.json"));
    REQUIRE(without.status == 0);
    CHECK_FALSE(parse(without).contains("timing_ms"));
}

TEST_CASE("cli input errors exit with status two") {
    CHECK(run_cli("code-info /tmp/mwlab-no-such-file.json").status == 2);
    CHECK(run_cli("no-such-verb").status == 2);
    CHECK(run_cli("dist " + data("rep3.json") + " --z abc").status == 2);
    CHECK(run_cli("dist " + data("rep3.json") + " --z 0/1").status == 2);

    std::string garbage = write_temp("mwlab-garbage.json", "not json at all {{{");
    CHECK(run_cli("code-info " + garbage).status == 2);

    std::string badfield = write_temp("mwlab-badfield.json",
                                      "{\"q\": 6, \"n\": 2, \"generators\": [[1, 1]]}");
    CHECK(run_cli("code-info " + badfield).status == 2);
    std::remove(garbage.c_str());
    std::remove(badfield.c_str());
}

TEST_CASE("cli budget controls") {
    CHECK(run_cli("verify-macwilliams " + data("hamming7.json") + " --budget 10").status == 2);
    CHECK(run_cli("--budget 0 code-info " + data("rep3.json")).status == 2);
    CHECK(run_cli("--budget abc code-info " + data("rep3.json")).status == 2);

    setenv("MWLAB_BUDGET", "10", 1);
    CliResult env = run_cli("verify-macwilliams " + data("hamming7.json"));
    unsetenv("MWLAB_BUDGET");
    CHECK(env.status == 2);

    setenv("MWLAB_BUDGET", "12x", 1);
    CliResult bad = run_cli("code-info " + data("rep3.json"));
    unsetenv("MWLAB_BUDGET");
    CHECK(bad.status == 2);
}
