#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "srpoly/cli.hpp"
#include "srpoly/io.hpp"
#include "srpoly/verify.hpp"

using namespace srpoly;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("gen emits the pinned first-kind quartic") {
    const CliRun r = run({"gen", "--kind", "T", "--n", "2", "--lead", "1", "--next", "-2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1,-2,0,-2,1]\n");
    CHECK(r.err.empty());
}

TEST_CASE("classify reports the boundary case") {
    const CliRun r =
        run({"classify", "--kind", "T", "--n", "2", "--lead", "1", "--next", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"case\": \"boundary_plus_one\"") != std::string::npos);
    CHECK(r.out.find("\"c\": 1.0") != std::string::npos);
}

TEST_CASE("roots on a coefficient file uses the oracle") {
    const TempFile f("cli_test_quad.json", "[1,0,1]\n");
    const CliRun r = run({"roots", "--coeffs", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"method\": \"oracle\"") != std::string::npos);
    CHECK(r.out.find("1.5707963267948966") != std::string::npos);
}

TEST_CASE("roots from flags defaults to the bracket method") {
    const CliRun r =
        run({"roots", "--kind", "U", "--n", "3", "--lead", "1", "--next", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"method\": \"bracket\"") != std::string::npos);
    CHECK(r.out.find("\"total\": 6") != std::string::npos);
}

TEST_CASE("exactly one input source is enforced") {
    const TempFile f("cli_test_src.json", "[1,0,1]\n");
    const CliRun both =
        run({"roots", "--kind", "T", "--n", "2", "--coeffs", f.path});
    CHECK(both.code == 2);
    CHECK(both.err.find("error:") == 0);
    const CliRun neither = run({"classify"});
    CHECK(neither.code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "--kind", "Q", "--n", "2"}).code == 2);
    CHECK(run({"gen", "--bogus-flag"}).code == 2);
    CHECK(run({"sweep", "--kind", "T", "--n", "3", "--min", "1", "--max", "-1",
               "--steps", "5"})
              .code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"gen", "--help"}).code == 0);
}

TEST_CASE("detect recovers gen output for every kind across sizes") {
    for (const std::string kind : {"T", "U", "V", "W"}) {
        for (int n = 2; n <= 25; ++n) {
            const CliRun gen = run({"gen", "--kind", kind, "--n", std::to_string(n),
                                    "--lead", "1.5", "--next", "-0.75"});
            REQUIRE(gen.code == 0);
            const TempFile f("cli_test_roundtrip.json", gen.out);
            const CliRun det = run({"detect", "--coeffs", f.path});
            REQUIRE(det.code == 0);
            CHECK(det.out.find("\"kind\": \"" + kind + "\"") != std::string::npos);
            CHECK(det.out.find("\"n\": " + std::to_string(n)) != std::string::npos);
            CHECK(det.out.find("\"lead\": 1.5") != std::string::npos);
            CHECK(det.out.find("\"next\": -0.75") != std::string::npos);
        }
    }
}

TEST_CASE("detect rejects a stranger with exit 2") {
    const TempFile f("cli_test_stranger.json", "[1,2,3,2,1]\n");
    const CliRun r = run({"detect", "--coeffs", f.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("sweep output parses back") {
    const CliRun r = run({"sweep", "--kind", "V", "--n", "4", "--min", "-1.5", "--max",
                          "1.5", "--steps", "21"});
    REQUIRE(r.code == 0);
    const SweepTable t = SweepTable::from_csv(r.out);
    CHECK(t.width() == 4);
    CHECK(t.to_csv() == r.out);
    CHECK(t.xs_increasing());
}

TEST_CASE("verify is deterministic for a fixed seed") {
    const std::vector<std::string> args = {"verify", "--cases", "4", "--seed", "42"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"pass\": true") != std::string::npos);
    CHECK(a.out.find("\"seed\": 42") != std::string::npos);
    CHECK(a.out.find("\"cases_run\": 23") != std::string::npos);
}

TEST_CASE("identities audits cleanly") {
    const CliRun r = run({"identities", "--n-max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"overall\": true") != std::string::npos);
}

TEST_CASE("cheb emits coefficients and zeros") {
    const CliRun c = run({"cheb", "--kind", "V", "--n", "3"});
    CHECK(c.code == 0);
    CHECK(c.out == "[1,-4,-4,8]\n");
    const CliRun z = run({"cheb", "--kind", "T", "--n", "1", "--zeros"});
    CHECK(z.code == 0);
    const std::vector<double> zero = parse_coeffs(z.out);
    REQUIRE(zero.size() == 1);
    CHECK(std::abs(zero[0]) < 1e-15);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_test_out.txt";
    const CliRun r = run({"gen", "--kind", "W", "--n", "2", "--lead", "3", "--next", "1",
                          "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(line == "[3,1,1,1,3]");
    std::remove(path.c_str());
}
