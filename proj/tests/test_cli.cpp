#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef JACSYZ_BIN
#error "JACSYZ_BIN must point at the CLI binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string base = "/tmp/jacsyz_cli_" + std::to_string(++counter);
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(JACSYZ_BIN) + " " + args +
                      " >" + base + ".out 2>" + base + ".err";
    int rc = std::system(cmd.c_str());
    Run r;
    r.code = WEXITSTATUS(rc);
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return r;
}

using nlohmann::json;

}  // namespace

TEST_CASE("predict --toric emits the documented JSON and exit 0") {
    auto r = run_cli("predict --toric -n 2 -e 2 --json");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"steps\":[{\"k\":0,\"twists\":[{\"e\":0,\"c\":1}]},"
          "{\"k\":1,\"twists\":[{\"e\":4,\"c\":3}]},"
          "{\"k\":2,\"twists\":[{\"e\":7,\"c\":3}]},"
          "{\"k\":3,\"twists\":[{\"e\":9,\"c\":1}]}]}\n");
    auto j = json::parse(r.out);
    CHECK(j["steps"].size() == 4);
    CHECK(j["steps"][1]["twists"][0]["e"] == 4);
}

TEST_CASE("verify-toric on the main fixture matches (exit 0)") {
    auto r = run_cli("verify-toric --builtin example1-main --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["hypotheses"]["normal_crossing"] == true);
    CHECK(j["hypotheses"]["regular_sequence"] == true);
    CHECK(j["match"] == true);
    CHECK(j["exponents"] == json::array({3, 3, 3}));
    CHECK(j["computed"] == j["predicted"]);
}

TEST_CASE("verify-toric on the tangent conic reports hypothesis failure (exit 2)") {
    auto r = run_cli("verify-toric --builtin example1-tangent --json");
    CHECK(r.code == 2);
    auto j = json::parse(r.out);
    CHECK(j["hypotheses"]["normal_crossing"] == false);
    CHECK(j["hypotheses"]["failing_edges"] == json::parse("[[0],[1],[2]]"));
    CHECK(j["match"] == false);
}

TEST_CASE("verify-toric on dependent lines: exit 2, --force computes the table") {
    auto bare = run_cli("verify-toric --builtin example1-degenerate --json");
    CHECK(bare.code == 2);
    auto j = json::parse(bare.out);
    CHECK(j["computed"].is_null());
    CHECK(j["match"] == false);

    auto forced = run_cli("verify-toric --builtin example1-degenerate --force --json");
    CHECK(forced.code == 2);
    auto jf = json::parse(forced.out);
    CHECK(jf["computed"] ==
          json::parse("{\"steps\":[{\"k\":0,\"twists\":[{\"e\":0,\"c\":1}]},"
                      "{\"k\":1,\"twists\":[{\"e\":4,\"c\":3}]},"
                      "{\"k\":2,\"twists\":[{\"e\":6,\"c\":1},{\"e\":7,\"c\":1},{\"e\":8,\"c\":1}]},"
                      "{\"k\":3,\"twists\":[{\"e\":9,\"c\":1}]}]}"));
    CHECK(jf["exponents"] == json::array({2, 3, 4}));
}

TEST_CASE("verify-cor1 on fixtures") {
    auto r = run_cli("verify-cor1 --builtin example1-main --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["checks"]["annihilation"] == true);
    CHECK(j["checks"]["computed_in_rho"] == true);
    CHECK(j["checks"]["rho_in_computed"] == true);
    CHECK(j["match"] == true);

    CHECK(run_cli("verify-cor1 --builtin example1-tangent --json").code == 2);
}

TEST_CASE("resolve") {
    auto r = run_cli("resolve --expr \"x0^3+x1^3+x2^3\" -n 2 --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) ==
          json::parse(run_cli("predict --smooth -n 2 -d 3 --json").out));

    auto rb = run_cli("resolve --builtin example1-main --json");
    CHECK(rb.code == 0);
    CHECK(json::parse(rb.out) == json::parse(run_cli("predict --toric -n 2 -e 2 --json").out));

    // text mode renders a grid
    auto rt = run_cli("resolve --builtin example1-main");
    CHECK(rt.code == 0);
    CHECK(rt.out.find("total:") != std::string::npos);

    // --max-degree runs the consistency oracle
    auto rc = run_cli("resolve --builtin example1-main --max-degree 11 --json");
    CHECK(rc.code == 0);
}

TEST_CASE("d0") {
    auto r = run_cli("d0 --builtin example1-degenerate --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["m"] == 3);
    CHECK(j["exponents"] == json::array({2, 3, 4}));
    CHECK(j["generators"].size() == 3);
    CHECK(j["generators"][0].size() == 3);
}

TEST_CASE("checkers") {
    CHECK(run_cli("check-nc --builtin fermat -n 2 -e 2").code == 0);
    auto r = run_cli("check-nc --builtin example1-tangent --json");
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["failing_edges"] == json::parse("[[0],[1],[2]]"));
    CHECK(run_cli("check-regseq --builtin fermat -n 2 -e 2 --json").code == 0);
    CHECK(run_cli("check-regseq --expr \"x0^2\" -n 2").code == 2);
}

TEST_CASE("random models") {
    auto r = run_cli("verify-toric --random -n 2 -e 1 --seed 3 --bound 10 --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["match"] == true);
    // exhausting the attempt cap is a hypothesis failure
    CHECK(run_cli("check-nc --random -n 2 -e 2 --seed 1 --bound 0").code == 2);
}

TEST_CASE("file input") {
    std::string path = "/tmp/jacsyz_cli_input.txt";
    {
        std::ofstream f(path);
        f << "ring 3\nx0^4+x1^4+x2^4\n";
    }
    auto r = run_cli("resolve --input " + path + " --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(run_cli("predict --smooth -n 2 -d 4 --json").out));
    std::remove(path.c_str());
}

TEST_CASE("usage and parse errors exit 64 with error: prefix") {
    auto no_source = run_cli("resolve");
    CHECK(no_source.code == 64);
    CHECK(no_source.err.rfind("error:", 0) == 0);

    auto bad_expr = run_cli("resolve --expr \"x0^\" -n 2");
    CHECK(bad_expr.code == 64);
    CHECK(bad_expr.err.rfind("error:", 0) == 0);

    auto stray_var = run_cli("resolve --expr \"x0^2+x5\" -n 2");
    CHECK(stray_var.code == 64);
    CHECK(stray_var.err.find("out of range") != std::string::npos);

    CHECK(run_cli("frobnicate").code == 64);
    CHECK(run_cli("predict --toric --smooth -n 2 -e 2 -d 3").code == 64);
    CHECK(run_cli("resolve --expr \"x0+x1\" -n 2 --builtin fermat").code == 64);
    CHECK(run_cli("resolve --builtin no-such-fixture").code == 64);
}

TEST_CASE("prime field runs") {
    auto r = run_cli("verify-toric --builtin example1-main --field fp:2147483647 --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["match"] == true);
    CHECK(run_cli("resolve --builtin example1-main --field fp:4").code == 64);
}

TEST_CASE("byte-identical reruns and thread-count independence") {
    std::string cmd = "verify-toric --builtin example1-main --json";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    auto c = run_cli("check-nc --builtin example1-tangent --json");
    auto d = run_cli("check-nc --builtin example1-tangent --json", "JACSYZ_THREADS=4");
    CHECK(c.out == d.out);
    CHECK(c.code == d.code);
}

TEST_CASE("lex order option") {
    auto g = run_cli("resolve --builtin example1-main --order grevlex --json");
    auto l = run_cli("resolve --builtin example1-main --order lex --json");
    CHECK(g.code == 0);
    CHECK(l.code == 0);
    CHECK(json::parse(g.out) == json::parse(l.out));
}
