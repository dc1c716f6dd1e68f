// Prints one PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <CLI11.hpp>

#include <iostream>

#include "hypcox/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  hypcox::AcceptanceOptions options;
  options.fixture_dir = HYPCOX_FIXTURE_DIR;
  bool no_cache = false;
  app.add_option("--workers", options.workers)->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", options.cache.dir);
  app.add_flag("--no-cache", no_cache);
  app.add_option("--fixtures", options.fixture_dir);
  app.add_option("--seed", options.seed);
  app.add_option("--only", options.only)->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  options.cache.enabled = !no_cache;

  int failed = 0;
  hypcox::run_acceptance(options, [&](const hypcox::CriterionResult& r) {
    failed += !r.pass;
    std::cout << hypcox::format_line(r) << std::endl;
  });
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
