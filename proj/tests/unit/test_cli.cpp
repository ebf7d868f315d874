#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "hunt/families.hpp"
#include "hunt/graph_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using hunt::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hunt_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("solve reports the hunting number") {
  std::string grid = write_file("grid.txt", hunt::write_graph(hunt::grid_graph(3, 3)));
  Run r = run({"--format", "structured", "solve", grid});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["value"] == 2);
  CHECK(j["outcome"] == "win");
  CHECK(j["strategy"]["k"] == 2);

  Run k1 = run({"solve", grid, "--k", "1", "--format", "structured"});
  CHECK(k1.code == 0);
  CHECK(json_of(k1)["verdict"] == "no_win");

  Run text = run({"solve", grid});
  CHECK(text.code == 0);
  CHECK(text.out.find("value: 2") != std::string::npos);
}

TEST_CASE("output does not depend on the thread count") {
  std::string g = write_file("grid34.txt", hunt::write_graph(hunt::grid_graph(3, 4)));
  Run one = run({"--format", "structured", "solve", g, "--single-thread"});
  Run many = run({"--format", "structured", "solve", g, "--threads", "4"});
  REQUIRE(one.code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("state cap exits with the unknown code") {
  std::string g = write_file("grid44.txt", hunt::write_graph(hunt::grid_graph(4, 4)));
  Run r = run({"--format", "structured", "solve", g, "--max-states", "5"});
  CHECK(r.code == 3);
  auto j = json_of(r);
  CHECK(j["outcome"] == "unknown");
  CHECK(j["value"].is_null());
  CHECK(j["lower"].get<int>() <= 3);
}

TEST_CASE("verify prints a trace or an escape walk") {
  std::string p4 = write_file("p4.txt", hunt::write_graph(hunt::path_graph(4)));
  std::string sweep = write_file("sweep.json", "{\"n\":4,\"k\":1,\"shots\":[[1],[2],[2],[1]]}");
  Run win = run({"--format", "structured", "verify", p4, sweep});
  REQUIRE(win.code == 0);
  CHECK(json_of(win)["result"] == "win");
  CHECK(json_of(win)["rounds"] == 4);

  std::string bad = write_file("bad.json", "{\"n\":4,\"k\":1,\"shots\":[[1],[1]]}");
  Run lose = run({"--format", "structured", "verify", p4, bad});
  CHECK(lose.code == 0);
  CHECK(json_of(lose)["result"] == "lose");
  CHECK(json_of(lose)["escape_walk"].size() == 2);
}

TEST_CASE("recognize, bounds and separators") {
  std::string c4 = write_file("c4.txt", hunt::write_graph(hunt::cycle_graph(4)));
  Run rec = run({"--format", "structured", "recognize", c4, "--method", "via-bg"});
  REQUIRE(rec.code == 0);
  CHECK(json_of(rec)["one_hunterwin"] == false);
  CHECK(json_of(rec)["witness"]["host"] == "B_G");

  std::string k4 = write_file("k4.txt", hunt::write_graph(hunt::complete_graph(4)));
  Run b = run({"--format", "structured", "bounds", k4, "--l", "2"});
  REQUIRE(b.code == 0);
  CHECK(json_of(b)["chain"]["holds"] == true);
  CHECK(json_of(b)["layered"]["ca"].get<int>() >= 3);

  Run s = run({"--format", "structured", "separators", k4, "--problem", "bss"});
  REQUIRE(s.code == 0);
  CHECK(json_of(s)["objective"] == 2);
}

TEST_CASE("generate and reduce") {
  Run g = run({"generate", "path", "3"});
  REQUIRE(g.code == 0);
  CHECK(hunt::read_graph(g.out) == hunt::path_graph(3));

  std::string prefix = (scratch() / "tp").string();
  Run r = run({"reduce", "3partition", "--numbers", "2,2,2,2,3,3", "--partition", "0,1,4;2,3,5",
               "-o", prefix});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(prefix + ".txt"));
  CHECK(fs::exists(prefix + ".layout.json"));
  auto layout = nlohmann::json::parse(std::ifstream(prefix + ".layout.json"));
  std::string start;
  for (const auto& v : layout["start"]) start += (start.empty() ? "" : ",") + v.dump();
  Run v = run({"--format", "structured", "verify", prefix + ".txt", prefix + ".strategy.json",
               "--start", start});
  REQUIRE(v.code == 0);
  CHECK(json_of(v)["result"] == "win");
  CHECK(json_of(v)["rounds"] == 12);
  CHECK(json_of(v)["hunters"] == 7);
}

TEST_CASE("play catches the rabbit on a path") {
  std::string p4 = write_file("p4play.txt", hunt::write_graph(hunt::path_graph(4)));
  Run r = run({"play", p4, "--k", "1"}, "1\n2\n2\n1\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("rabbit caught in 4 rounds") != std::string::npos);

  Run blind = run({"play", p4, "--k", "1", "--blind"}, "1\nq\n");
  CHECK(blind.out.find("quit after 1 rounds") != std::string::npos);
  CHECK(blind.out.find("{") == std::string::npos);
}

TEST_CASE("errors map to exit codes and JSON lines") {
  std::string bad = write_file("broken.txt", "3 2\n0 1\n");
  Run parse = run({"solve", bad});
  CHECK(parse.code == 2);
  auto e = nlohmann::json::parse(parse.err);
  CHECK(e["error"] == "parse");
  CHECK(e["message"].get<std::string>().find("line 3") != std::string::npos);

  Run usage = run({"solve"});
  CHECK(usage.code == 1);
  CHECK(nlohmann::json::parse(usage.err)["error"] == "usage");

  CHECK(run({}).code == 1);
  CHECK(run({"recognize", bad, "--method", "sideways"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
