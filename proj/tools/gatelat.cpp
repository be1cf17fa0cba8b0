#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gatelat/budget.hpp"
#include "gatelat/error.hpp"
#include "gatelat/workbench.hpp"

namespace {

int emit(nlohmann::json const &body, std::string const &out) {
  std::string text = body.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out);
  if (!file) {
    std::cerr << "gatelat: cannot write '" << out << "'\n";
    return 1;
  }
  file << text;
  return 0;
}

int error_exit(gatelat::Error const &e) {
  std::cerr << "gatelat: " << e.what() << '\n';
  return gatelat::exit_code(e.code());
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"gatelat - gates, gate lattices and cellular automata on "
               "edge shifts"};
  app.require_subcommand(1);

  std::string file, out, suite;
  int jobs = 1;
  std::optional<std::uint64_t> budget;
  bool trim = false, timing = false;

  auto *run = app.add_subcommand("run", "run every task of a workbench file");
  run->add_option("FILE", file, "workbench JSON file")->required();
  run->add_option("--out", out, "write the report here instead of stdout");
  run->add_option("--jobs", jobs, "run independent tasks in parallel")
      ->check(CLI::PositiveNumber);
  run->add_option("--budget", budget, "search budget (overrides GATELAT_BUDGET)");
  run->add_flag("--trim", trim, "trim non-essential vertices");
  run->add_flag("--timing", timing, "include wall-clock timings");

  auto *verify = app.add_subcommand("verify", "run a named property suite");
  verify->add_option("FILE", file, "workbench JSON file")->required();
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--out", out, "write the report here instead of stdout");
  verify->add_option("--budget", budget,
                     "search budget (overrides GATELAT_BUDGET)");
  verify->add_flag("--trim", trim, "trim non-essential vertices");

  CLI11_PARSE(app, argc, argv);

  gatelat::RunOptions options;
  options.budget = budget ? *budget : gatelat::Budget::from_env().limit();
  options.timing = timing;

  try {
    auto wb = gatelat::parse_workbench(file, trim);
    gatelat::Report report =
        run->parsed() ? gatelat::run_all(wb, options, jobs)
                      : gatelat::verify_suite(wb, suite, options);
    if (int rc = emit(report.body, out))
      return rc;
    return report.exit_code;
  } catch (gatelat::Error const &e) {
    return error_exit(e);
  }
}
