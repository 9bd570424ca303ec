#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fri/cli.hpp"
#include "test_support.hpp"

using namespace fri;
using namespace fri::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("fri_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::vector<std::string> exacts(const json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v["exact"].get<std::string>());
  return out;
}

using S = std::vector<std::string>;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimax on the five-user system") {
  const Run r = run({"minimax", data_path("example6.json")});
  CHECK(r.code == 0);
  const json d = r.doc();
  CHECK(d["status"] == "ok");
  CHECK(d["command"] == "minimax");
  CHECK(d["payload"]["u_star"]["exact"] == "5/6");
  CHECK(d["payload"]["unique"] == false);
  CHECK(exacts(d["payload"]["per_row"]) == S{"5/6", "7/10", "4/5", "19/25"});
}

TEST_CASE("minimax trace, minimal optimals and verification") {
  const Run r = run({"minimax", data_path("example7.json"), "--trace", "--minimal-optimals",
                     "--verify", "--step", "1/30"});
  REQUIRE(r.code == 0);
  const json p = r.doc()["payload"];
  CHECK(p["traces"].size() == 4);
  CHECK(p["minimal_optimal_solutions"].size() == 2);
  CHECK(exacts(p["minimal_optimal_solutions"][0]) == S{"7/15", "5/6", "5/6", "5/6", "5/6"});
  CHECK(p["verification"]["equality_guaranteed"] == true);
  CHECK(p["verification"]["agrees"] == true);

  const Run single = run({"minimax", data_path("example4.json"), "--trace"});
  const json t = single.doc()["payload"]["traces"][0];
  CHECK(t["stop"] == "stable-active-set");
  CHECK(t["steps"][0]["u"]["exact"] == "17/20");
  CHECK(t["steps"][0]["active"] == json::array({3, 4, 5, 6}));
}

TEST_CASE("minimax verification on a coarse grid is not an equality claim") {
  const Run r = run({"minimax", data_path("example5.json"), "--verify", "--step", "1/10"});
  CHECK(r.code == 0);
  CHECK(r.doc()["payload"]["verification"]["equality_guaranteed"] == false);
}

TEST_CASE("minimal from a point with an explicit order") {
  const Run r = run({"minimal", data_path("example1.json"), "--from",
                     data_path("points/walkthrough_x.json"), "--perm", "1,2,3"});
  REQUIRE(r.code == 0);
  const json p = r.doc()["payload"];
  CHECK(exacts(p["minimal"]) == S{"7/10", "9/10", "1"});
  CHECK(p["steps"].size() == 3);
  CHECK(p["steps"][0]["column"] == 1);
  CHECK(p["shortcut_taken"] == false);
}

TEST_CASE("minimal variants") {
  const Run all = run({"minimal", data_path("example3.json"), "--from",
                       data_path("points/example3_x.json"), "--all-perms", "--limit", "10"});
  REQUIRE(all.code == 0);
  CHECK(all.doc()["payload"]["count"] == 3);

  const Run coord = run({"minimal", data_path("example1.json"), "--coordinate", "1"});
  REQUIRE(coord.code == 0);
  CHECK(exacts(coord.doc()["payload"]["point"]) == S{"3/5", "1", "1"});
  CHECK(coord.doc()["payload"]["certified"] == true);

  CHECK(run({"minimal", data_path("example1.json"), "--perm", "1,1,2"}).code == 2);
  CHECK(run({"minimal", data_path("example1.json"), "--perm", "1,2,3", "--all-perms"}).code == 2);
  CHECK(run({"minimal", data_path("example1.json"), "--coordinate", "4"}).code == 2);
  CHECK(run({"minimal", data_path("example2.json"), "--from",
             data_path("points/example3_x.json"), "--all-perms", "--limit", "0"})
            .code == 2);
}

TEST_CASE("check") {
  const Run bad = run({"check", data_path("infeasible.json")});
  CHECK(bad.code == 1);
  CHECK(bad.doc()["status"] == "infeasible");
  CHECK(bad.doc()["payload"]["solvable"] == false);

  const Run pt = run({"check", data_path("example2.json"), "--point",
                      data_path("points/example2_candidate.json")});
  REQUIRE(pt.code == 0);
  CHECK(pt.doc()["payload"]["is_solution"] == true);
  CHECK(pt.doc()["payload"]["certificate"]["minimal"] == false);

  const std::string narrow = temp_file("narrow.json", R"({"x": ["1"]})");
  CHECK(run({"check", data_path("example2.json"), "--point", narrow}).code == 2);
}

TEST_CASE("greatest, unique-minimal and unique-solution") {
  const Run g = run({"greatest", data_path("example1.json")});
  CHECK(exacts(g.doc()["payload"]["greatest"]) == S{"1", "1", "1"});
  CHECK(run({"greatest", data_path("infeasible.json")}).code == 1);

  const Run u = run({"unique-minimal", data_path("example1.json")});
  CHECK(u.doc()["payload"]["unique_minimal"].is_null());
  CHECK(exacts(u.doc()["payload"]["delta_vector"]) == S{"3/5", "3/5", "3/5"});

  const std::string tight = temp_file("tight.json", R"({"A": [["0.5", "0.5"]], "b": ["1"]})");
  CHECK(run({"unique-solution", tight}).doc()["payload"]["unique_solution"] == true);
  CHECK(run({"unique-solution", data_path("example1.json")}).doc()["payload"]["unique_solution"] ==
        false);
}

TEST_CASE("oracle subcommands") {
  const std::string single = temp_file("single.json", R"({"A": [["1"]], "b": ["0.5"]})");
  const Run f = run({"oracle", "feasible", single, "--step", "1/10"});
  REQUIRE(f.code == 0);
  CHECK(f.doc()["payload"]["count"] == 6);
  CHECK(f.doc()["payload"]["visited"] == 11);

  const Run m = run({"oracle", "minimax", data_path("example5.json"), "--step", "1/30", "--full"});
  CHECK(m.doc()["payload"]["grid_value"]["exact"] == "13/15");

  const Run w = run({"oracle", "falsify", data_path("example2.json"), "--step", "1/10", "--point",
                     data_path("points/example2_candidate.json")});
  CHECK_FALSE(w.doc()["payload"]["witness"].is_null());
  CHECK(run({"oracle", "falsify", data_path("example2.json")}).code == 2);
  CHECK(run({"oracle", "feasible", data_path("example2.json"), "--step", "2/3"}).code == 2);
}

TEST_CASE("grid cap exceeded is a resource error") {
  ::setenv("FRI_GRID_CAP", "100", 1);
  const Run r = run({"oracle", "feasible", data_path("example6.json"), "--step", "1/10"});
  ::unsetenv("FRI_GRID_CAP");
  CHECK(r.code == 3);
  CHECK(r.doc()["status"] == "resource-error");
}

TEST_CASE("input errors") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(unknown.err.find("unknown command \"frobnicate\"") != std::string::npos);
  CHECK(unknown.doc()["status"] == "input-error");

  CHECK(run({}).code == 2);
  CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
  const std::string bad = temp_file("bad.json", R"({"A": [["1.2"]], "b": ["0.5"]})");
  const Run r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.doc()["message"].get<std::string>().find("A[1][1]") != std::string::npos);
}

TEST_CASE("pretty output") {
  const Run r = run({"--pretty", "minimax", data_path("example6.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("status   ok") != std::string::npos);
  CHECK(r.out.find("u_star") != std::string::npos);
  const Run after = run({"minimax", data_path("example6.json"), "--pretty"});
  CHECK(after.code == 0);
  CHECK(after.out == r.out);
}

TEST_CASE("output is deterministic") {
  const S args{"minimax", data_path("example7.json"), "--trace", "--minimal-optimals"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
}

}
