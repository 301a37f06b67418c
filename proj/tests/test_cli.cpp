#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <algorithm>
#include <sys/wait.h>

#include "mqo/graph_io.hpp"
#include "support/test_graphs.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MQO_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli gen") {
  SUBCASE("p = 1 emits the complete graph") {
    const CliResult r = run_cli("gen --kind er --n 4 --p 1.0 --seed 1");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    const mqo::Graph g = mqo::read_canonical(in);
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);
  }
  SUBCASE("mean-degree form lands near the binomial expectation") {
    const CliResult r = run_cli("gen --kind er --n 1000 --d 100 --seed 1");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    const mqo::Graph g = mqo::read_canonical(in);
    // E[m] = 49950, sd ~ 212
    CHECK(std::abs(static_cast<double>(g.m()) - 49950.0) < 4 * 212.0);
  }
  SUBCASE("missing --n is a usage error") {
    CHECK(run_cli("gen --kind er --p 0.5").exit_code == 2);
  }
}

TEST_CASE("cli solve") {
  SUBCASE("maxcut on a triangle") {
    const CliResult r =
        run_cli("solve --problem maxcut --gen er:3:p1.0 --budget-secs 1 --seed 1");
    CHECK(r.exit_code == 0);
    const json record = json::parse(r.out);
    CHECK(record.at("best_score") == 2);
  }
  SUBCASE("the Laplacian surrogate stalls at a constant init") {
    const CliResult r = run_cli(
        "solve --problem maxcut --gen er:100:p0.66 --objective laplacian "
        "--init-constant 0.3 --tgs 0 --max-outer 1 --no-local-search "
        "--budget-secs 5 --seed 1");
    CHECK(r.exit_code == 0);
    const json record = json::parse(r.out);
    CHECK(record.at("best_score") == 0);
  }
  SUBCASE("unreadable graph files exit 2") {
    CHECK(run_cli("solve --problem mis --graph /does/not/exist").exit_code == 2);
  }
  SUBCASE("conflicting objective and problem exit 2") {
    CHECK(run_cli("solve --problem mis --gen er:10:2 --objective laplacian").exit_code == 2);
  }
}

TEST_CASE("cli sweep") {
  SUBCASE("a single-point sweep reproduces the solve result") {
    const std::string common =
        "--problem mis --gen er:40:4 --budget-secs 60 --max-outer 1 --tgs 5 --seed 9";
    const CliResult solo = run_cli("solve " + common);
    const json record = json::parse(solo.out);

    const CliResult swept = run_cli("sweep " + common + " --param rho --values 0.5");
    CHECK(swept.exit_code == 0);
    std::istringstream lines(swept.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    // column 7 is the best score
    std::istringstream cells(row);
    std::string cell;
    for (int i = 0; i < 7; ++i) std::getline(cells, cell, ',');
    CHECK(std::stoll(cell) == record.at("best_score").get<int64_t>());
  }
}

TEST_CASE("cli sweep over lambda is stable across decades") {
  const CliResult r = run_cli(
      "sweep --problem maxcut --gen er:60:8 --budget-secs 60 --max-outer 2 --tgs 10 "
      "--seed 4 --param lambda --values 0.0001,0.001,0.01,0.1");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  std::vector<double> bests;
  while (std::getline(lines, line) && line[0] != '#') {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 7; ++i) std::getline(cells, cell, ',');
    bests.push_back(std::stod(cell));
  }
  REQUIRE(bests.size() == 4);
  const auto [lo, hi] = std::minmax_element(bests.begin(), bests.end());
  CHECK((*hi - *lo) / *hi <= 0.1);
}

TEST_CASE("cli verify exact suite") {
  const CliResult r = run_cli("verify --suite exact --max-n 10 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
