#include <doctest.h>

#include <fstream>
#include <sstream>

#include "goi/cli.hpp"
#include "goi/json_io.hpp"
#include "goi/proof_text.hpp"

using namespace goi;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(GOI_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) {
    return std::string(GOI_GOLDEN_DIR) + "/" + name;
}

void check_golden(const std::string& name, const std::string& got) {
    if (std::getenv("GOI_REGEN_GOLDENS")) {
        std::ofstream(golden_path(name)) << got;
        return;
    }
    std::ifstream in(golden_path(name));
    REQUIRE_MESSAGE(in.good(), "golden missing: ", name,
                    " (set GOI_REGEN_GOLDENS=1 to create)");
    std::ostringstream want;
    want << in.rdbuf();
    CHECK_MESSAGE(want.str() == got, "golden drift in ", name);
}

}  // namespace

TEST_CASE("check accepts the fixtures and reports the sequent") {
    RunResult r = run({"check", fixture_path("pf-fig1.mall")});
    CHECK(r.code == 0);
    CHECK(r.out == "⊢ [~X * X, X * ~X], ~X, X*~X, X&X\n");
}

TEST_CASE("parse errors exit with code two") {
    std::string bad = fixture_path("does-not-exist.mall");
    CHECK(run({"check", bad}).code != 0);

    std::ofstream tmp("/tmp/goi-bad.mall");
    tmp << "with(ax X)";
    tmp.close();
    RunResult r = run({"check", "/tmp/goi-bad.mall"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);

    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({"exec", fixture_path("pf-w1.mall"), "--mode", "nonsense"}).code == 2);
}

TEST_CASE("net reports pass for fixtures and failures for mutations") {
    RunResult good = run({"net", fixture_path("pf-fig1.mall")});
    CHECK(good.code == 0);
    CHECK(good.out.find("P3 pass") != std::string::npos);

    RunResult json = run({"net", fixture_path("pf-fig1.mall"), "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"pass\": true") != std::string::npos);

    RunResult bad = run({"net", fixture_path("nets/fig1-resolution-flip.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("witness") != std::string::npos);
}

TEST_CASE("paired nilpotency of the legal cycle net is two") {
    RunResult r = run({"nilp", "--paired", fixture_path("pf-fig1.mall")});
    CHECK(r.code == 0);
    CHECK(r.out == "n = 2\n");
    RunResult slice = run({"nilp", "--mode", "cplustimes", fixture_path("pf-fig1.mall")});
    CHECK(slice.code == 0);
    CHECK(slice.out == "n = 2\n");
}

TEST_CASE("exec prints the executed matrix") {
    RunResult r = run({"exec", fixture_path("pf-w1.mall")});
    CHECK(r.code == 0);
    CHECK(r.out.find("n0 = 1") != std::string::npos);
    RunResult raw = run({"exec", fixture_path("pf-w2.mall"), "--mode", "raw"});
    CHECK(raw.code == 0);
    CHECK(raw.out.find("a1^2") != std::string::npos);
}

TEST_CASE("eq prints the swap system") {
    RunResult r = run({"eq", fixture_path("cut-tau-tau.mall")});
    CHECK(r.code == 0);
    CHECK(r.out == "a1 = ā2\nā1 = a2\n");
}

TEST_CASE("solve emits a checked substitution") {
    RunResult r = run({"solve", fixture_path("cut-tau-tau.mall"), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("normalize and invariance run end to end") {
    RunResult n = run({"normalize", fixture_path("pf-w1.mall")});
    CHECK(n.code == 0);
    CHECK(n.out.find("normal form: with(ax X, ax X ; ~X, ~X)") != std::string::npos);
    RunResult inv = run({"invariance", fixture_path("case32.mall")});
    CHECK(inv.code == 0);
    RunResult aut = run({"invariance", "--autonomous", fixture_path("case2.mall")});
    CHECK(aut.code == 0);
}

TEST_CASE("identical invocations are byte identical") {
    for (const char* name : {"pf-w1.mall", "pf-fig1.mall", "cut-tau-tau.mall"}) {
        RunResult a = run({"interpret", fixture_path(name), "--format", "json"});
        RunResult b = run({"interpret", fixture_path(name), "--format", "json"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("golden outputs of every fixture") {
    for (const char* name : {"pf-ax", "pf-w1", "pf-w2", "pf-eta", "pf-tau", "cut-tau-tau",
                             "pf-fig1", "case2", "case32", "chain", "ax-cut", "tensor-par"}) {
        RunResult itp = run({"interpret", fixture_path(std::string(name) + ".mall"),
                             "--format", "json"});
        REQUIRE(itp.code == 0);
        check_golden(std::string(name) + ".interpret.json", itp.out);

        RunResult msr = run({"measure", fixture_path(std::string(name) + ".mall"),
                             "--format", "json"});
        REQUIRE(msr.code == 0);
        check_golden(std::string(name) + ".measure.json", msr.out);

        RunResult net = run({"net", fixture_path(std::string(name) + ".mall"),
                             "--format", "json"});
        REQUIRE(net.code == 0);
        check_golden(std::string(name) + ".net.json", net.out);

        RunResult eqs = run({"eq", fixture_path(std::string(name) + ".mall"),
                             "--format", "json"});
        REQUIRE(eqs.code == 0);
        check_golden(std::string(name) + ".eq.json", eqs.out);
    }
}
