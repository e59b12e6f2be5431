#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "twoassoc/enumerate_wn.hpp"
#include "twoassoc/poset_io.hpp"

using namespace twoassoc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("twoassoc_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("assoc enumerate table") {
  auto r = run({"--no-cache", "assoc", "enumerate", "--r", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("K_4: 11 elements") != std::string::npos);
  CHECK(r.out.find("rank counts: 5, 5, 1") != std::string::npos);
  CHECK(r.out.find("DISAGREE") == std::string::npos);
}

TEST_CASE("verify eulerian exits 0") {
  auto r = run({"--no-cache", "verify", "eulerian", "--n", "1,1"});
  CHECK(r.status == 0);
}

TEST_CASE("invalid inputs exit 2") {
  auto zero = run({"--no-cache", "counts", "--n", "0,0"});
  CHECK(zero.status == 2);
  CHECK(zero.err.find("n != 0") != std::string::npos);
  CHECK(run({"--no-cache", "cd-index", "--n", "1,1", "--r", "3"}).status == 2);
  CHECK(run({"--format", "xml", "assoc", "enumerate", "--r", "3"}).status == 2);
  CHECK(run({"--no-cache", "wn", "enumerate", "--n", "1,x"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--no-cache", "--max-elements", "5", "wn", "enumerate", "--n", "2,1"}).status == 2);
  CHECK(run({"--no-cache", "gf", "solve", "--tree", "(.", "--max-degree", "3"}).status == 2);
}

TEST_CASE("wn json round trips through the poset reader") {
  auto r = run({"--no-cache", "--format", "json", "wn", "enumerate", "--n", "2,1"});
  REQUIRE(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["elements"].size() == 17);
  auto p = poset_from_json(doc);
  CHECK(identical(p, enumerate_Wn({2, 1}).poset));
  CHECK(doc["elements"][0].contains("pi"));
}

TEST_CASE("dot output") {
  auto r = run({"--no-cache", "--format", "dot", "assoc", "enumerate", "--r", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("rank=same") != std::string::npos);
  CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("cd-index command") {
  auto k = run({"--no-cache", "cd-index", "--r", "4"});
  CHECK(k.status == 0);
  CHECK(k.out.find("c^2 + 3d") != std::string::npos);
  auto w = run({"--no-cache", "--format", "json", "cd-index", "--n", "1,1"});
  CHECK(w.status == 0);
  CHECK(w.out.find("\"c\"") != std::string::npos);
}

TEST_CASE("counts table and gf solve") {
  auto r = run({"--no-cache", "counts", "--n", "1,1,1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("all rows AGREE") != std::string::npos);
  auto g = run({"--no-cache", "gf", "solve", "--max-degree", "4"});
  CHECK(g.status == 0);
  CHECK(g.out.find("5 + 5t + t^2") != std::string::npos);
  auto j = run({"--no-cache", "--format", "json", "gf", "solve", "--tree", "(..)", "--max-degree", "2"});
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.out)["vars"] == 2);
}

TEST_CASE("warm and cold cache give identical output") {
  auto dir = fresh_dir("cache");
  const std::vector<std::string> args{"--cache-dir", dir.string(), "--format", "json", "counts", "--n", "2,1"};
  auto cold = run(args);
  REQUIRE(cold.status == 0);
  CHECK(fs::exists(dir / "counts.jsonl"));
  auto warm = run(args);
  CHECK(warm.status == 0);
  CHECK(warm.out == cold.out);
  auto uncached = run({"--no-cache", "--format", "json", "counts", "--n", "2,1"});
  CHECK(uncached.out == cold.out);
  fs::remove_all(dir);
}

TEST_CASE("corrupted cache lines are skipped with a warning") {
  auto dir = fresh_dir("corrupt");
  {
    std::ofstream f(dir / "counts.jsonl");
    f << "{not json\n";
  }
  auto r = run({"--cache-dir", dir.string(), "counts", "--n", "1,1"});
  CHECK(r.status == 0);
  CHECK(r.err.find("warning: ignoring corrupted cache line 1") != std::string::npos);
  CHECK(r.out.find("all rows AGREE") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("quick audit passes") {
  auto r = run({"--no-cache", "audit", "--profile", "quick"});
  CHECK(r.status == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
}
