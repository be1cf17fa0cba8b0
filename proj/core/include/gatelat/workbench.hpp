#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatelat/automaton.hpp"
#include "gatelat/budget.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/lattice.hpp"

namespace gatelat {

struct Workbench {
  std::map<std::string, ShiftPtr> shifts;
  std::map<std::string, Gate> gates;
  std::map<std::string, CA> automata;
  std::map<std::string, GateLattice> lattices;
  std::map<std::string, LatticeWord> words;
  std::vector<nlohmann::json> tasks;
};

Workbench parse_workbench(std::filesystem::path const &path, bool trim = false);
Workbench parse_workbench_json(nlohmann::json const &doc, bool trim = false);

struct RunOptions {
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;
};

struct Report {
  nlohmann::json body;
  int exit_code = 0;
};

Report run_task(Workbench const &wb, nlohmann::json const &task,
                RunOptions const &options);

// all tasks, reports in task order; exit code is the worst seen
Report run_all(Workbench const &wb, RunOptions const &options, int jobs = 1);

std::vector<std::string> const &suite_names();
Report verify_suite(Workbench const &wb, std::string const &name,
                    RunOptions const &options);

} // namespace gatelat
