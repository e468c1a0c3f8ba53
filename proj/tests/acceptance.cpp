// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exits 0 once all criteria have run; --strict exits 1 if any failed.
#include <cstring>
#include <iostream>

#include "frobmean/acceptance.hpp"
#include "frobmean/parallel.hpp"

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) strict |= std::strcmp(argv[i], "--strict") == 0;
  const unsigned workers = frobmean::default_workers();
  int failed = 0;
  for (const auto& c : frobmean::acceptance_criteria()) {
    const auto r = frobmean::run_criterion(c.id, workers);
    std::cout << frobmean::format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (frobmean::acceptance_criteria().size() - failed) << "/" << frobmean::acceptance_criteria().size()
            << " criteria pass" << std::endl;
  return strict && failed > 0 ? 1 : 0;
}
