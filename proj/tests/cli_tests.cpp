// End-to-end tests of the command-line tool: exit codes, JSON payloads, and
// byte-stable output.  Runs the built binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef KNOTDELTA_CLI_PATH
#error "KNOTDELTA_CLI_PATH must point at the built binary"
#endif

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

int run_counter = 0;

RunResult run_cli(const std::string& args) {
    std::string out_path = "/tmp/knotdelta_cli_out_" + std::to_string(run_counter);
    std::string err_path = "/tmp/knotdelta_cli_err_" + std::to_string(run_counter);
    ++run_counter;
    std::string cmd = std::string(KNOTDELTA_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

json result_of(const RunResult& r) {
    json j = json::parse(r.out);
    return j.at("result");
}

const char* kTrefoil = "\"PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]\"";

}  // namespace

TEST_CASE("invariant subcommand") {
    RunResult r = run_cli(std::string("--format json invariant ") + kTrefoil);
    REQUIRE(r.exit_code == 0);
    json res = result_of(r);
    CHECK(res["ilk_text"] == "3X_1");
    CHECK(res["writhe"] == 3);
    CHECK(res["crossing_number"] == 3);
    CHECK(res["H"] == -3);

    RunResult u = run_cli("--format json invariant \"PD[]\"");
    REQUIRE(u.exit_code == 0);
    json ur = result_of(u);
    CHECK(ur["ilk"].empty());
    CHECK(ur["writhe"] == 0);
    CHECK(ur["H"] == 0);
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli("invariant \"PD[X(1,4,2,3)]\"").exit_code == 2);
    CHECK(run_cli("--format json c2 \"PD[oops]\"").exit_code == 2);
    CHECK(run_cli("rlength \"Q_0\"").exit_code == 2);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("family 3 Foo").exit_code == 1);
    CHECK(run_cli("family 3").exit_code == 1);
}

TEST_CASE("moves subcommand lists the kink removal") {
    RunResult r = run_cli("--format json moves \"PD[X(1,2,2,1)]\"");
    REQUIRE(r.exit_code == 0);
    json res = result_of(r);
    int removals = 0;
    for (const auto& m : res["moves"])
        if (m["kind"] == "R1-remove") {
            ++removals;
            CHECK(m["delta"] == json::parse("[[\"X\",0,-1]]"));
        }
    CHECK(removals == 1);
}

TEST_CASE("apply replays a move and a stale site exits 4") {
    RunResult mv = run_cli("--format json moves \"PD[X(1,2,2,1)]\"");
    REQUIRE(mv.exit_code == 0);
    json sites = result_of(mv)["moves"];
    json removal;
    for (const auto& m : sites)
        if (m["kind"] == "R1-remove") removal = m;
    REQUIRE(!removal.is_null());

    std::ofstream("/tmp/knotdelta_move.json") << removal.dump();
    RunResult ap = run_cli("--format json apply \"PD[X(1,2,2,1)]\" --moves /tmp/knotdelta_move.json");
    REQUIRE(ap.exit_code == 0);
    json res = result_of(ap);
    CHECK(res["after_pd"] == "PD[]");
    CHECK(res["after"]["crossing_number"] == 0);

    // same site against the wrong diagram
    RunResult stale = run_cli(std::string("apply ") + kTrefoil + " --moves /tmp/knotdelta_move.json");
    CHECK(stale.exit_code == 4);
}

TEST_CASE("rlength subcommand") {
    RunResult x0 = run_cli("--format json rlength \"X_0\"");
    REQUIRE(x0.exit_code == 0);
    CHECK(result_of(x0)["exact"] == 1);

    RunResult v1 = run_cli("--format json rlength \"2X_0 + Y_1 - 2Y_0 - X_-1\"");
    REQUIRE(v1.exit_code == 0);
    json res = result_of(v1);
    CHECK(res["lower_bound"] == 4);
    CHECK(res["certificate"] == "g");
    CHECK(res["exact"] == 4);
    CHECK(res["limit_hit"] == false);

    RunResult v10 = run_cli("--format json rlength \"11X_0 + 10Y_1 - 11Y_0 - 10X_-1\" --bound-only");
    REQUIRE(v10.exit_code == 0);
    json res10 = result_of(v10);
    CHECK(res10["lower_bound"] == 22);
    CHECK(res10["exact"].is_null());

    RunResult capped = run_cli("--format json rlength \"3X_0 + 2Y_1 - 3Y_0 - 2X_-1\" --limit 3");
    CHECK(capped.exit_code == 3);
    CHECK(result_of(capped)["limit_hit"] == true);
}

TEST_CASE("family subcommand") {
    RunResult d3 = run_cli("--format json family 3 Dn");
    REQUIRE(d3.exit_code == 0);
    json res = result_of(d3);
    CHECK(res["crossings"] == 7);
    CHECK(res["ilk"] == json::parse("[[\"X\",-1,3],[\"Y\",0,4]]"));

    RunResult seq0 = run_cli("--format json family 0 sequence");
    REQUIRE(seq0.exit_code == 0);
    CHECK(result_of(seq0)["count"] == 2);

    RunResult e5 = run_cli("--format json family 5 En");
    RunResult d5 = run_cli("--format json family 5 Dn");
    CHECK(result_of(e5)["pd"] != result_of(d5)["pd"]);
}

TEST_CASE("c2 and arnold subcommands") {
    RunResult t = run_cli(std::string("--format json c2 ") + kTrefoil);
    REQUIRE(t.exit_code == 0);
    json res = result_of(t);
    CHECK(res["c2"] == 1);
    CHECK(res["H"] == -3);
    CHECK(res["A"] == 1);

    RunResult k = run_cli("--format json arnold \"PD[X(1,2,2,1)]\"");
    REQUIRE(k.exit_code == 0);
    CHECK(result_of(k)["A"] == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
    std::string cmd = std::string("--format json invariant ") + kTrefoil;
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.out == b.out);
    RunResult c = run_cli("--format json family 2 sequence");
    RunResult d = run_cli("--format json family 2 sequence");
    CHECK(c.out == d.out);
}

TEST_CASE("verify on corpus files") {
    // well-formed corpus with correct expectations
    std::ofstream("/tmp/knotdelta_corpus_ok.json") << R"([
      {"name": "trefoil", "pd": "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]",
       "expect": {"ilk": [["X",1,3]], "writhe": 3, "H": -3, "c2": 1, "A": 1}},
      "PD[X(1,2,2,1)]"
    ])";
    RunResult ok = run_cli("--format json verify /tmp/knotdelta_corpus_ok.json");
    REQUIRE(ok.exit_code == 0);
    CHECK(result_of(ok)["total_violations"] == 0);

    // corrupted delta table: exit 5 with a counterexample
    std::ofstream("/tmp/knotdelta_corpus_bad.json") << R"([
      {"name": "kink", "pd": "PD[X(1,2,2,1)]",
       "expect": {"deltas": [{"move": 0, "delta": [["Y",7,1]]}]}}
    ])";
    RunResult bad = run_cli("--format json verify /tmp/knotdelta_corpus_bad.json");
    CHECK(bad.exit_code == 5);
    CHECK(result_of(bad).contains("counterexample"));

    // empty corpus: zero checks, success
    std::ofstream("/tmp/knotdelta_corpus_empty.json") << "[]";
    RunResult empty = run_cli("--format json verify /tmp/knotdelta_corpus_empty.json");
    REQUIRE(empty.exit_code == 0);
    CHECK(result_of(empty)["total_checks"] == 0);
}

TEST_CASE("stdin input") {
    std::ofstream("/tmp/knotdelta_stdin.pd") << "PD[X(1,2,2,1)]\n";
    std::string cmd = std::string(KNOTDELTA_CLI_PATH) +
                      " --format json invariant < /tmp/knotdelta_stdin.pd > /tmp/knotdelta_stdin_out";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f("/tmp/knotdelta_stdin_out");
    json j = json::parse(f);
    CHECK(j["result"]["ilk_text"] == "X_0");
}
