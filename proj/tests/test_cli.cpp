#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orthowell/cli.hpp"

using namespace orthowell;
using json = nlohmann::json;

namespace {

struct CliRun {
    int rc = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.rc = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("modes subcommand emits the level table") {
    const CliRun r = run({"modes", "--family", "III", "--cutoff", "4"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["tool"] == "orthowell");
    CHECK(rep["pass"] == true);
    REQUIRE(rep["modes"].size() == 5);
    CHECK(rep["modes"][0]["j"] == 0);
    CHECK(rep["modes"][0]["kind"] == "const");
    CHECK(rep["modes"][1]["j"] == 2);
    CHECK(rep["modes"][1]["kind"] == "cos");
    CHECK(rep["modes"][2]["kind"] == "sin");
    CHECK(rep["modes"][4]["j"] == 4);
}

TEST_CASE("gram subcommand passes for a family and reports csv") {
    const CliRun r = run({"gram", "--family", "I", "--cutoff", "16"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["is_orthonormal"] == true);
    CHECK(rep["max_offdiag"].get<double>() <= 1e-12);

    const CliRun csv = run({"gram", "--family", "I", "--cutoff", "4", "--emit", "csv"});
    CHECK(csv.rc == kExitOk);
    // header + 4 rows
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
    CHECK(csv.out.substr(0, 5) == "mode,");
}

TEST_CASE("sift subcommand discovers the four families") {
    const CliRun r = run({"sift", "--cutoff", "8"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["set_count"] == 4);
    CHECK(rep["pass"] == true);
    CHECK(rep["sets"][0]["family"] == "I");
    CHECK(rep["sets"][3]["family"] == "IV");
}

TEST_CASE("expand subcommand emits samples and passes its budget checks") {
    const CliRun r = run({"expand", "--family", "IV", "--cutoff", "15", "--fn", "const1"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["parseval_ratio"].get<double>() > 0.97);
    CHECK(rep["sup_error"].get<double>() > 0.15);

    const CliRun csv = run({"expand", "--family", "IV", "--cutoff", "15", "--fn", "const1",
                            "--emit", "csv", "--samples", "11"});
    CHECK(csv.rc == kExitOk);
    CHECK(csv.out.substr(0, 8) == "x,f,s_n\n");
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 12);
}

TEST_CASE("operators subcommand runs the identity checks") {
    const CliRun r = run({"operators", "--check", "lindep", "--cutoff", "8", "--ref-cutoff", "32"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["hamiltonian_sum_residual"].get<double>() <= 1e-12);
    CHECK(rep["projector_sum_residual"].get<double>() <= 1e-12);
    CHECK(rep["pass"] == true);

    const CliRun bad = run({"operators", "--check", "bogus"});
    CHECK(bad.rc == kExitUsage);
}

TEST_CASE("kets-check passes its table") {
    const CliRun r = run({"kets-check"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["checks"].size() >= 20);
}

TEST_CASE("mixed-bc reports the root ladder and the nontrivial candidates") {
    const CliRun r = run({"mixed-bc", "--hmax", "10", "--samples", "1001"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["nontrivial_solutions_found"] == true);
    CHECK(rep["roots"].size() == 6);
    CHECK(rep["pass"] == true);
}

TEST_CASE("converge emits the widening-well table") {
    const CliRun r = run({"converge", "--family", "IV", "--p-target", "3.14159", "--a-list",
                          "2,4", "--window", "1"});
    CHECK(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["table"].size() == 2);

    const CliRun bad = run({"converge", "--family", "I", "--a-list", "2"});
    CHECK(bad.rc == kExitBadRange);
}

TEST_CASE("byte-identical output for identical invocations") {
    const std::vector<std::string> args{"gram", "--family", "II", "--cutoff", "12", "--emit",
                                        "csv"};
    const CliRun r1 = run(args);
    const CliRun r2 = run(args);
    CHECK(r1.rc == kExitOk);
    CHECK(r1.out == r2.out);

    const std::vector<std::string> jargs{"operators", "--check", "all", "--cutoff", "4",
                                         "--ref-cutoff", "16"};
    CHECK(run(jargs).out == run(jargs).out);
}

TEST_CASE("exit codes: usage, range, output errors") {
    CHECK(run({"frobnicate"}).rc == kExitUsage);
    CHECK(run({"gram", "--family", "I", "--no-such-flag"}).rc == kExitUsage);
    CHECK(run({}).rc == kExitUsage);
    CHECK(run({"gram", "--family", "V"}).rc == kExitBadRange);
    CHECK(run({"gram", "--family", "I", "--cutoff", "0"}).rc == kExitBadRange);
    CHECK(run({"gram", "--family", "I", "--a", "-2"}).rc == kExitBadRange);
    CHECK(run({"mixed-bc", "--samples", "10"}).rc == kExitBadRange);
    CHECK(run({"expand", "--family", "I", "--fn", "nope"}).rc == kExitBadRange);
    CHECK(run({"gram", "--family", "I", "--out", "/nonexistent-dir/x/y.csv"}).rc ==
          kExitOutputError);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_test_gram.csv";
    const CliRun r =
        run({"gram", "--family", "I", "--cutoff", "4", "--emit", "csv", "--out", path});
    CHECK(r.rc == kExitOk);
    const std::string body = slurp(path);
    CHECK(body.substr(0, 5) == "mode,");
    const CliRun direct = run({"gram", "--family", "I", "--cutoff", "4", "--emit", "csv"});
    CHECK(body == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("version flag") {
    const CliRun r = run({"--version"});
    CHECK(r.rc == kExitOk);
    CHECK(r.out.find("orthowell") != std::string::npos);
}
