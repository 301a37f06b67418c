#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "cli_common.hpp"

namespace mqo::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

SolveOptions with_value(SolveOptions opt, const std::string& param,
                        const std::string& value) {
  if (param == "rho") {
    opt.rho = std::stod(value);
  } else if (param == "lambda") {
    opt.lambda = std::stod(value);
  } else if (param == "momentum") {
    opt.momentum = std::stod(value);
  } else if (param == "local-search") {
    if (value != "on" && value != "off")
      throw UsageError("local-search values are on/off");
    opt.no_local_search = value == "off";
  } else {
    throw UsageError("--param must be rho, lambda, momentum or local-search");
  }
  return opt;
}

}  // namespace

int cmd_sweep(const SolveOptions& base, const std::string& param,
              const std::string& values, const std::string& seeds_csv, int jobs,
              const std::string& jsonl_path) {
  const auto value_list = split_list(values);
  if (value_list.empty()) throw UsageError("--values is empty");
  std::vector<uint64_t> seeds;
  if (seeds_csv.empty()) {
    seeds.push_back(base.seed);
  } else {
    for (const auto& s : split_list(seeds_csv)) seeds.push_back(std::stoull(s));
  }

  struct Job {
    SolveOptions options;
    std::string value;
  };
  std::vector<Job> grid;
  for (const auto& value : value_list) {
    for (uint64_t seed : seeds) {
      SolveOptions opt = with_value(base, param, value);
      opt.seed = seed;
      grid.push_back({std::move(opt), value});
    }
  }

  std::vector<SolveResult> results(grid.size());
  std::atomic<size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      results[i] = run_solve(grid[i].options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::ofstream jsonl;
  if (!jsonl_path.empty()) {
    jsonl.open(jsonl_path);
    if (!jsonl) throw UsageError("cannot open --jsonl file " + jsonl_path);
  }

  const Problem problem = base.problem == "mis" ? Problem::Mis : Problem::MaxCut;
  std::cout << run_record_csv_header() << "\n";
  std::map<std::string, std::pair<int64_t, int>> totals;  // value -> (sum, count)
  for (size_t i = 0; i < grid.size(); ++i) {
    std::cout << run_record_csv_row(param, grid[i].value, results[i].descriptor,
                                    results[i].report)
              << "\n";
    auto& [sum, count] = totals[grid[i].value];
    sum += results[i].report.best.score;
    ++count;
    if (jsonl.is_open()) {
      jsonl << run_record_json(problem, results[i].descriptor, results[i].report,
                               results[i].graph, results[i].load_secs)
                   .dump()
            << "\n";
    }
  }
  for (const auto& value : value_list) {
    const auto& [sum, count] = totals[value];
    std::cout << "# mean " << param << "=" << value << " best="
              << static_cast<double>(sum) / count << " over " << count << " seeds\n";
  }
  return kExitOk;
}

}  // namespace mqo::cli
