// End-to-end checks of the command-line binary: output contracts, exit
// codes, and byte-deterministic CSV. The binary path is injected by CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(WIGNERBELL_BINARY) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) output.append(buf, n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("wigner-angle: both methods agree and print the axis") {
    const RunResult r = run("wigner-angle 0.6 0.6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-0.221314442348") != std::string::npos);
    CHECK(r.output.find("closed-form") != std::string::npos);
    CHECK(r.output.find("matrix-oracle") != std::string::npos);

    const RunResult zero = run("wigner-angle 0 0.9");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output.find("0.000000000000") != std::string::npos);
}

TEST_CASE("wigner-angle: superluminal input is a usage error") {
    const RunResult r = run("wigner-angle 1.0 0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("velocity must be < 1") != std::string::npos);
}

TEST_CASE("transform: mixing for phi+, invariance for psi+ and phi-") {
    const RunResult mixed = run("transform phi+ 0.6 0.6");
    CHECK(mixed.exit_code == 0);
    CHECK(mixed.output.find("-0.221314442348") != std::string::npos);
    CHECK(mixed.output.find("0.689860274") != std::string::npos);   // cos(theta)/sqrt2
    CHECK(mixed.output.find("0.155218562") != std::string::npos);   // |sin(theta)|/sqrt2
    CHECK(mixed.output.find("1.000000000000 -> 1.000000000000") != std::string::npos);

    const RunResult psi = run("transform psi+ 0.9 0.9");
    CHECK(psi.exit_code == 0);
    CHECK(psi.output.find("0.707106781") != std::string::npos);
    CHECK(psi.output.find("path difference") != std::string::npos);

    const RunResult phi_minus = run("transform phi- 0.3 0.8");
    CHECK(phi_minus.exit_code == 0);
    CHECK(phi_minus.output.find("0.707106781") != std::string::npos);

    CHECK(run("transform omega+ 0.5 0.5").exit_code == 2);
}

TEST_CASE("chsh-sweep: deterministic CSV with the pinned corner values") {
    const std::string path1 = "cli_sweep_a.csv";
    const std::string path2 = "cli_sweep_b.csv";
    const std::string flags = "chsh-sweep --beta-min 0 --beta-max 0.6 --beta-steps 2 "
                              "--beta-prime-min 0 --beta-prime-max 0.6 --beta-prime-steps 2 ";
    CHECK(run(flags + "--output " + path1).exit_code == 0);
    CHECK(run(flags + "--output " + path2).exit_code == 0);

    const std::string csv = slurp(path1);
    CHECK(csv == slurp(path2));
    CHECK(csv.rfind("beta,beta_prime,wigner_angle_rad,chsh_fixed,chsh_optimal,entropy,"
                    "schmidt_lambda1,schmidt_lambda2\n", 0) == 0);
    CHECK(csv.find("2.828427124746") != std::string::npos);
    CHECK(csv.find("2.692137655915") != std::string::npos);
    std::remove(path1.c_str());
    std::remove(path2.c_str());

    const RunResult to_stdout = run(flags);
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.output.find("2.692137655915") != std::string::npos);
}

TEST_CASE("chsh-sweep: unwritable output path fails with exit 1") {
    const RunResult r =
        run("chsh-sweep --beta-steps 1 --beta-prime-steps 1 --output /nonexistent-dir/out.csv");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("cannot open") != std::string::npos);
}

TEST_CASE("chsh-sweep: invalid grid is a usage error") {
    CHECK(run("chsh-sweep --beta-min 0.9 --beta-max 0.1").exit_code == 2);
    CHECK(run("chsh-sweep --beta-steps 0").exit_code == 2);
}

TEST_CASE("lhv-sim: prints all four quantities and is seed-deterministic") {
    const std::string args = "lhv-sim 0.7853981633974483 --samples 100000 --seed 7";
    const RunResult first = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("LHV MC estimate") != std::string::npos);
    CHECK(first.output.find("LHV exact") != std::string::npos);
    CHECK(first.output.find("QM value") != std::string::npos);
    CHECK(first.output.find("-0.707106781") != std::string::npos);
    CHECK(first.output.find("standard error") != std::string::npos);
    CHECK(first.output == run(args).output);

    CHECK(run("lhv-sim 4.0").exit_code == 2);  // angle out of [0, pi]
}

TEST_CASE("algebra-check: all relations pass in order") {
    const RunResult r = run("algebra-check");
    CHECK(r.exit_code == 0);
    const char* names[] = {"[J,P]", "[J,J]", "[J,K]", "[P,P]", "[J,H]",
                           "[P,H]", "[K,K]", "[K,P]", "[K,H]"};
    std::size_t pos = 0;
    for (const char* name : names) {
        const std::size_t found = r.output.find(name, pos);
        CHECK(found != std::string::npos);
        pos = found;
    }
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("bell-demo: reproduces the maximal violation") {
    const RunResult r = run("bell-demo");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("CHSH     = 2.828427124746") != std::string::npos);
    CHECK(r.output.find("tsirelson bound = 2.828427124746") != std::string::npos);
}

TEST_CASE("usage errors: missing subcommand or arguments") {
    CHECK(run("").exit_code == 2);
    CHECK(run("wigner-angle 0.5").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
