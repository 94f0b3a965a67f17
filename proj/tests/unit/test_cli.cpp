#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli/commands.hpp"

namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mmslab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = mmscli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("mmslab_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("cdstar writes report, series and metadata") {
  TempDir t;
  auto r = cli({"cdstar", "--model", "euclidean-grid:1d,h=0.05", "--out", t.path.string(), "--svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("holds") != std::string::npos);
  auto rep = read_json(t.path / "report.json");
  CHECK(rep["result"]["verdict"] == "holds");
  CHECK(fs::exists(t.path / "series.csv"));
  CHECK(fs::exists(t.path / "plot.svg"));
  auto meta = read_json(t.path / "meta.json");
  CHECK(meta["command"] == "cdstar");
  CHECK(meta.contains("started"));
}

TEST_CASE("w2 on a space file with Dirac endpoints") {
  TempDir t;
  {
    std::ofstream(t.path / "s.json")
        << R"({"metric": {"kind": "matrix", "data": [[0,1,2],[1,0,1],[2,1,0]]}, "weights": [1,1,1]})";
  }
  auto r = cli({"w2", (t.path / "s.json").string(), "--dirac0", "0", "--dirac1", "2", "--out", (t.path / "o").string()});
  REQUIRE(r.code == 0);
  CHECK(read_json(t.path / "o" / "report.json")["result"]["cost"] == 4.0);
}

TEST_CASE("ghdist between identical models is zero") {
  TempDir t;
  auto r = cli({"ghdist", "--model", "euclidean-grid:1d,h=0.1", "--model-b", "euclidean-grid:1d,h=0.1", "--out",
                t.path.string()});
  REQUIRE(r.code == 0);
  CHECK(read_json(t.path / "report.json")["result"]["value"] == 0.0);
}

TEST_CASE("models list names every kind") {
  TempDir t;
  auto r = cli({"models", "list", "--out", t.path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("cylinder") != std::string::npos);
  CHECK(read_json(t.path / "report.json")["kinds"].size() == 7);
}

TEST_CASE("exit codes") {
  TempDir t;
  CHECK(cli({"w2", "--model", "nonsense", "--out", t.path.string()}).code == 2);
  CHECK(cli({"w2", "--model", "euclidean-grid:1d,h=0.1", "--out", t.path.string()}).code == 2);
  CHECK(cli({"cdstar", "--model", "euclidean-grid:1d,h=0.1", "--t-grid", "0.5,x", "--out", t.path.string()}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  auto budget = cli({"ghdist", "--model", "euclidean-grid:1d,h=0.01", "--model-b", "euclidean-grid:1d,h=0.01",
                     "--mode", "exhaustive", "--out", t.path.string()});
  CHECK(budget.code == 3);
}
