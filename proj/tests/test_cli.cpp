// Drives the installed binary end to end through a scratch directory:
// subcommands, exit codes, artifact round trips, and rerun determinism.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const char* kCli = COVERCODE_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = std::string(kCli) + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream is(out_path);
    std::ostringstream os;
    os << is.rdbuf();
    return {WEXITSTATUS(rc), os.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    os << content;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run("").exit_code != 0);
    CHECK(run("no-such-command").exit_code != 0);
    CHECK(run("verify sat --file missing.pcm --rho 2").exit_code == 1);
}

TEST_CASE("bounds table prints the known thresholds") {
    const auto r = run("bounds table1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1007") != std::string::npos);
    CHECK(r.out.find("7186") != std::string::npos);
    CHECK(r.out.find("9125037") != std::string::npos);
    const auto c = run("bounds constants --R 3 --lambda 3");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("Q: 7186") != std::string::npos);
}

TEST_CASE("curve CSV has the declared header and normalization") {
    const auto r = run("bounds curve --R 3 --lambda 1 --q-from 30 --q-to 3000 --points 16");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("q,value,normalized", 0) == 0);
    // count data lines
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 17);
}

TEST_CASE("verify radius on the ternary identity prints 3") {
    spit("id3.pcm",
         "%covercode-pcm v1\n"
         "q 3^1 rows 3 cols 3\n"
         "1 0 0\n"
         "0 1 0\n"
         "0 0 1\n");
    const auto r = run("verify radius --file id3.pcm");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
    CHECK(run("verify radius --file id3.pcm --expect 3").exit_code == 0);
    CHECK(run("verify radius --file id3.pcm --expect 2").exit_code == 2);
}

TEST_CASE("construct produces a verifiable artifact, byte-identical on rerun") {
    const auto r1 = run("construct --q 13 --R 3 --lambda 3 --seed 0 --verify --out run_a");
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out.find("observed_saturation: 2") != std::string::npos);
    const std::string pcm1 = slurp("run_a.pcm");
    const std::string rep1 = slurp("run_a.report.txt");
    CHECK(slurp("run_a.manifest.txt").find("command: ") != std::string::npos);

    const auto r2 = run("construct --q 13 --R 3 --lambda 3 --seed 0 --verify --out run_b");
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp("run_b.pcm") == pcm1);
    CHECK(slurp("run_b.report.txt") == rep1);

    // the pcm round-trips byte-exactly through the verifier path
    CHECK(run("verify sat --file run_a.pcm --rho 2").exit_code == 0);
    CHECK(run("verify sat --file run_a.pcm --rho 1").exit_code == 2);
    CHECK(run("verify radius --file run_a.pcm --expect 3").exit_code == 0);
}

TEST_CASE("construct rejects an invalid L with the reason") {
    const auto r = run("construct --q 13 --R 3 --lambda 1 --seed 0 --out run_bad");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("must exceed R") != std::string::npos);
}

TEST_CASE("baseline emits a saturating set") {
    const auto r = run("baseline --q 7 --R 3 --seed 0 --sample 64 --out base_a");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("observed_saturation: 2") != std::string::npos);
    CHECK(run("verify sat --file base_a.pcm --rho 2").exit_code == 0);
}

TEST_CASE("lift and family pipeline") {
    const auto r = run("lift --in id3.pcm --m 1 --R 3 --out lift_a");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("n: 12") != std::string::npos);
    CHECK(r.out.find("r: 6") != std::string::npos);
    CHECK(run("verify radius --file lift_a.pcm --expect 3").exit_code == 0);
    CHECK(slurp("lift_a.lift.txt").find("mu 0:") != std::string::npos);

    const auto p = run("lift --in id3.pcm --m 1 --R 3 --pad --out lift_b");
    REQUIRE(p.exit_code == 0);
    CHECK(p.out.find("n: 21") != std::string::npos);

    const auto f = run("family --in id3.pcm --m-max 2 --R 3");
    CHECK(f.exit_code == 0);
    CHECK(f.out.find("m=2") != std::string::npos);
    CHECK(f.out.find("radius_ok=1") != std::string::npos);
}

TEST_CASE("directsum and density") {
    spit("ham13.pcm", [] {
        std::ostringstream os;
        os << "%covercode-pcm v1\nq 3^1 rows 3 cols 13\n";
        // all 13 canonical points of PG(2,3), columns in id order
        const int pts[13][3] = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {1, 0, 0},
                                {1, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2},
                                {1, 2, 0}, {1, 2, 1}, {1, 2, 2}};
        for (int row = 0; row < 3; ++row) {
            for (int j = 0; j < 13; ++j) os << (j ? " " : "") << pts[j][row];
            os << "\n";
        }
        return os.str();
    }());
    CHECK(run("verify radius --file ham13.pcm --expect 1").exit_code == 0);
    const auto d = run("directsum --a id3.pcm --b ham13.pcm --out ds_a");
    REQUIRE(d.exit_code == 0);
    CHECK(d.out.find("n: 16") != std::string::npos);
    CHECK(run("verify radius --file ds_a.pcm --expect 4").exit_code == 0);

    const auto y = run("density --n 13 --r 3 --q 3 --R 1");
    CHECK(y.exit_code == 0);
    CHECK(y.out.rfind("1", 0) == 0);
}

TEST_CASE("thread count does not change outputs") {
    ::setenv("COVERCODE_THREADS", "1", 1);
    const auto r1 = run("construct --q 13 --R 3 --lambda 3 --seed 5 --out thr_a");
    ::setenv("COVERCODE_THREADS", "2", 1);
    const auto r2 = run("construct --q 13 --R 3 --lambda 3 --seed 5 --out thr_b");
    ::unsetenv("COVERCODE_THREADS");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp("thr_a.pcm") == slurp("thr_b.pcm"));
    CHECK(slurp("thr_a.report.txt") == slurp("thr_b.report.txt"));
}
