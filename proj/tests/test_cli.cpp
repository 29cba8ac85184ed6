#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hopf/cli.hpp"
#include "hopf/hzf.hpp"

using namespace hopf;

namespace {

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/hopfcli-XXXXXX";
        path = mkdtemp(tmpl);
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check hopf on a fixture reference") {
    RunResult r = run_cli({"check", "hopf", "fixture:H4/H4"});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check hopf on an exported file") {
    TempDir dir;
    Fixture fx = load_fixture("H4");
    hzf::save_algebra(dir.file("h4.hzf"), *fx.algebra("H4"));
    RunResult r = run_cli({"check", "hopf", dir.file("h4.hzf")});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
}

TEST_CASE("check braiding and pairing subcommands") {
    TempDir dir;
    Fixture fx = load_fixture("H4");
    hzf::save_algebra(dir.file("h4.hzf"), *fx.algebra("H4"));
    hzf::save_form(dir.file("p.form.json"), fx.form("p"));

    RunResult ok = run_cli({"check", "braiding", dir.file("p.form.json"), "--algebra", dir.file("h4.hzf")});
    INFO(ok.out, ok.err);
    CHECK(ok.code == 0);

    // A broken table: flip one sign so the braiding fails and exit code is 1.
    std::string text = hzf::read_file(dir.file("p.form.json"));
    auto pos = text.find("\"-alpha\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"alpha\"");
    hzf::write_file(dir.file("bad.form.json"), text);
    RunResult bad = run_cli({"check", "braiding", dir.file("bad.form.json"), "--algebra", dir.file("h4.hzf")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify sigma round trip on the rank-one double") {
    TempDir dir;
    Fixture fx = load_fixture("Borel-double(1)");
    ProductPtr dbl = fx.product();
    Quadruple quad{fx.form("p"), fx.form("tau"), flip_dual(fx.form("lambda")), fx.form("lambda")};
    hzf::save_quad(dir.file("borel1.quad"), quad);
    RunResult r = run_cli({"verify", "sigma", "--product", "fixture:Borel-double(1)", "--quad",
                           dir.file("borel1.quad"), "--direction", "roundtrip"});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("round trip: quadruple reproduced exactly") != std::string::npos);
}

TEST_CASE("ybe subcommand emits the matrix and passes") {
    TempDir dir;
    RunResult r = run_cli({"ybe", "--braiding", "fixture:H4/p", "--algebra", "fixture:H4/H4",
                           "--out", dir.file("R.mat")});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("16x16") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    std::string mat = hzf::read_file(dir.file("R.mat"));
    CHECK(mat.substr(0, 5) == "4 16\n");
}

TEST_CASE("enumerate subcommand writes results") {
    TempDir dir;
    Field f3 = Field::prime(3);
    HopfPtr h4 = make_sweedler_h4(f3);
    hzf::save_algebra(dir.file("h4f3.hzf"), *h4);
    RunResult r = run_cli({"enumerate", "--algebra", dir.file("h4f3.hzf"), "--prime", "3", "--out",
                           dir.file("results.jsonl")});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("3 braidings found") != std::string::npos);
    std::ifstream in(dir.file("results.jsonl"));
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3);

    // Bound exceeded maps to exit code 3.
    RunResult bounded = run_cli({"enumerate", "--algebra", dir.file("h4f3.hzf"), "--prime", "3",
                                 "--max-free", "0"});
    CHECK(bounded.code == 3);
}

TEST_CASE("demo and export") {
    TempDir dir;
    RunResult demo = run_cli({"demo", "kX"});
    INFO(demo.out, demo.err);
    CHECK(demo.code == 0);
    CHECK(demo.out.find("fixture kX") != std::string::npos);

    RunResult exp = run_cli({"export", "H4", "--dir", dir.path});
    CHECK(exp.code == 0);
    CHECK(exp.out.find("wrote") != std::string::npos);
    RunResult reread = run_cli({"check", "hopf", dir.file("H4-H4.hzf")});
    CHECK(reread.code == 0);
}

TEST_CASE("build from a datum file") {
    TempDir dir;
    Fixture toys = load_fixture("Z2-toys");
    hzf::save_datum(dir.file("z4.datum.json"), *toys.product("Z4-crossed")->datum);
    RunResult r = run_cli({"build", "--datum", dir.file("z4.datum.json"), "--out", dir.file("z4.hzf")});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
    RunResult check = run_cli({"check", "hopf", dir.file("z4.hzf")});
    CHECK(check.code == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    RunResult a = run_cli({"check", "hopf", "fixture:H4/H4"});
    RunResult b = run_cli({"check", "hopf", "fixture:H4/H4"});
    CHECK(a.out == b.out);
    setenv("HOPF_THREADS", "1", 1);
    RunResult c = run_cli({"check", "hopf", "fixture:H4/H4"});
    unsetenv("HOPF_THREADS");
    CHECK(a.out == c.out);
}

TEST_CASE("machine-readable output is stable json lines") {
    TempDir dir;
    RunResult r = run_cli({"--json", dir.file("report.jsonl"), "check", "hopf", "fixture:H4/H4"});
    CHECK(r.code == 0);
    std::string text = hzf::read_file(dir.file("report.jsonl"));
    CHECK(text.find("\"axiom\":\"associativity\"") != std::string::npos);
    CHECK(text.find("\"status\":\"pass\"") != std::string::npos);
    RunResult again = run_cli({"--json", dir.file("report2.jsonl"), "check", "hopf", "fixture:H4/H4"});
    CHECK(hzf::read_file(dir.file("report2.jsonl")) == text);
}

TEST_CASE("usage errors exit with code 2") {
    RunResult r = run_cli({"check", "hopf"});
    CHECK(r.code == 2);
    RunResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
    RunResult missing = run_cli({"check", "hopf", "/nonexistent.hzf"});
    CHECK(missing.code == 2);
}
