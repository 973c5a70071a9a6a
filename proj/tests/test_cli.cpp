// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs of the installed command-line binary. The binary path is
// injected by the build as PCRANK_CLI_PATH.
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include <pcrank/matrix.hpp>
#include <pcrank/matrix_io.hpp>

#ifndef PCRANK_CLI_PATH
#error "PCRANK_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("pcrank_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path unique_path(const std::string& stem) {
    static std::atomic<int> counter{0};
    return scratch_dir() / (stem + "_" + std::to_string(counter.fetch_add(1)));
}

CliResult run_cli(const std::string& args) {
    const fs::path out = unique_path("stdout");
    const fs::path err = unique_path("stderr");
    const std::string cmd = std::string(PCRANK_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_matrix(const std::string& stem, const std::string& content) {
    fs::path p = unique_path(stem);
    p += ".csv";
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

const std::string kConsistentCsv = "1,2,6\n1/2,1,3\n1/6,1/3,1\n";
const std::string kUniformCsv = "1,1,1\n1,1,1\n1,1,1\n";
const std::string kBrokenCsv = "1,2,6\n1/2,1,3\n1/6,1/4,1\n";

} // namespace

TEST_CASE("rank reports both methods on a consistent matrix") {
    const fs::path m = write_matrix("consistent", kConsistentCsv);
    const CliResult r = run_cli("rank --input " + m.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["lambda_max"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
    REQUIRE(j["weights_ev"].size() == 3);
    REQUIRE(j["weights_gm"].size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(j["weights_ev"][i].get<double>() ==
              doctest::Approx(j["weights_gm"][i].get<double>()).epsilon(1e-10));
    CHECK(j["weights_ev"][0].get<double>() == doctest::Approx(0.6).epsilon(1e-10));
    CHECK(j["ranking"] == nlohmann::json::array({1, 2, 3}));
    CHECK(j["tied"] == false);
}

TEST_CASE("rank in plain and csv formats") {
    const fs::path m = write_matrix("consistent2", kConsistentCsv);
    const CliResult plain = run_cli("rank --input " + m.string());
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("lambda_max: ") != std::string::npos);
    CHECK(plain.out.find("weights_ev: ") != std::string::npos);
    CHECK(plain.out.find("ranking: 1 > 2 > 3") != std::string::npos);

    const CliResult csv = run_cli("rank --input " + m.string() + " --format csv --method ev");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("item,weight_ev\n", 0) == 0);
}

TEST_CASE("rank --method gm reproduces the worked example weights") {
    const fs::path m = write_matrix("worked", "1,2,8\n1/2,1,2\n1/8,1/2,1\n");
    const CliResult r = run_cli("rank --input " + m.string() + " --format json --method gm");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j.contains("lambda_max"));
    CHECK(j["weights_gm"][0].get<double>() == doctest::Approx(0.6434).epsilon(1e-4));
    CHECK(j["weights_gm"][1].get<double>() == doctest::Approx(0.2553).epsilon(1e-4));
    CHECK(j["weights_gm"][2].get<double>() == doctest::Approx(0.1013).epsilon(1e-4));
}

TEST_CASE("input failures exit with code 2 and a named error") {
    const fs::path broken = write_matrix("broken", kBrokenCsv);
    const CliResult r = run_cli("rank --input " + broken.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("ReciprocityViolation") != std::string::npos);

    const CliResult missing = run_cli("rank --input /nonexistent/m.csv");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("ParseError") != std::string::npos);

    const CliResult no_input = run_cli("rank");
    CHECK(no_input.exit_code == 2);
}

TEST_CASE("inconsistency reports the triad and eigenvalue indices") {
    const fs::path m = write_matrix("inc", "1,2,8\n1/2,1,2\n1/8,1/2,1\n");
    const CliResult r = run_cli("inconsistency --input " + m.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["ki"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j["kappa"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j["lambda_max"].get<double>() >= 3.0);
    CHECK(j["ci"].get<double>() > 0.0);
}

TEST_CASE("certify exits 0 on a consistent matrix with zero swap budget") {
    const fs::path m = write_matrix("cert_ok", kConsistentCsv);
    const CliResult r = run_cli("certify --input " + m.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["order_certified"] == true);
    CHECK(j["top_certified"] == true);
    CHECK(j["max_swaps"] == 0);
    CHECK(j["tau_lower"] == 1.0);
    CHECK(j["rho_lower"] == 1.0);
}

TEST_CASE("certify exits 1 when the order cannot be certified") {
    // Budget 0.2346 exceeds the 0.20 minimal gap; the top gap 0.30 clears it.
    const CliResult r =
        run_cli("certify --ki 0.10 --d 0.20 --dstar 0.30 --n 3 --format json");
    REQUIRE(r.exit_code == 1);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["order_certified"] == false);
    CHECK(j["top_certified"] == true);
}

TEST_CASE("certify bounds-only mode reproduces the worked five-object budgets") {
    const CliResult a = run_cli("certify --ki 0.11 --d 0.08 --n 5 --format json");
    CHECK(a.exit_code == 1);
    const nlohmann::json ja = nlohmann::json::parse(a.out);
    CHECK(ja["md_upper"].get<double>() == doctest::Approx(0.262).epsilon(1e-2));
    CHECK(ja["max_swaps"] == 3);
    CHECK(ja["tau_lower"].get<double>() == 0.40);

    const CliResult b = run_cli("certify --ki 0.03 --d 0.20 --dstar 0.30 --n 3 --format json");
    CHECK(b.exit_code == 0);
    const nlohmann::json jb = nlohmann::json::parse(b.out);
    CHECK(jb["order_certified"] == true);
    CHECK(jb["top_certified"] == true);
}

TEST_CASE("certify rejects mixing matrix and bounds-only modes") {
    const fs::path m = write_matrix("cert_mixed", kConsistentCsv);
    const CliResult r =
        run_cli("certify --input " + m.string() + " --ki 0.1 --d 0.2 --n 3");
    CHECK(r.exit_code == 2);
    const CliResult partial = run_cli("certify --ki 0.1 --n 3");
    CHECK(partial.exit_code == 2);
    const CliResult neither = run_cli("certify");
    CHECK(neither.exit_code == 2);
}

TEST_CASE("tie degeneracy exits with code 3") {
    const fs::path m = write_matrix("uniform", kUniformCsv);
    const CliResult cert = run_cli("certify --input " + m.string());
    CHECK(cert.exit_code == 3);
    CHECK(cert.err.find("TiesPresent") != std::string::npos);

    const CliResult cmp = run_cli("compare --input " + m.string());
    CHECK(cmp.exit_code == 3);
    CHECK(cmp.err.find("TiesPresent") != std::string::npos);
}

TEST_CASE("compare reports agreement metrics inside the distance bounds") {
    const fs::path m = write_matrix("cmp", "1,2,8\n1/2,1,2\n1/8,1/2,1\n");
    const CliResult r = run_cli("compare --input " + m.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["tau"] == 1.0);
    CHECK(j["rho"] == 1.0);
    CHECK(j["md"].get<double>() <= j["md_upper"].get<double>() + 1e-8);
    CHECK(j["md"].get<double>() < 1e-6);
}

TEST_CASE("montecarlo writes the four result files") {
    const fs::path out = unique_path("mc_out");
    const CliResult r = run_cli("montecarlo --n 3 --bases 4 --beta-max 2 --beta-step 0.25 "
                                "--seed 5 --out " +
                                out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("fraction_meeting: ") != std::string::npos);
    CHECK(r.out.find("trials: ") != std::string::npos);

    const nlohmann::json j = nlohmann::json::parse(slurp(out / "result.json"));
    CHECK(j["total_trials"].get<long>() + j["no_convergence_count"].get<long>() == 4 * 5);
    CHECK(fs::exists(out / "trials.csv"));
    CHECK(fs::exists(out / "histogram_ki.csv"));
    CHECK(fs::exists(out / "histogram_ci.csv"));
}

TEST_CASE("montecarlo reruns are byte-identical across thread counts") {
    const fs::path a = unique_path("mc_a");
    const fs::path b = unique_path("mc_b");
    const std::string common = "montecarlo --n 3 --bases 4 --beta-max 3 --beta-step 0.5 --seed 11";
    REQUIRE(run_cli(common + " --threads 1 --out " + a.string()).exit_code == 0);
    REQUIRE(run_cli(common + " --threads 4 --out " + b.string()).exit_code == 0);
    for (const char* name : {"result.json", "trials.csv", "histogram_ki.csv", "histogram_ci.csv"})
        CHECK(slurp(a / name) == slurp(b / name));
}

TEST_CASE("montecarlo validates its flags") {
    CHECK(run_cli("montecarlo --n 1 --out /tmp/x").exit_code == 2);
    CHECK(run_cli("montecarlo --beta-step 0 --out /tmp/x").exit_code == 2);
    CHECK(run_cli("montecarlo --n 3").exit_code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("certify --help").exit_code == 0);
}
