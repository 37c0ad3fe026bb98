#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "hyturan/verify.hpp"

// Runs the acceptance criteria (all, or the ids given on the command line)
// and exits nonzero when any of them fails.
int main(int argc, char** argv) {
  hyturan::verify::Options opts;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0)
      opts.quick = true;
    else
      ids.push_back(std::atoi(argv[i]));
  }
  if (ids.empty())
    for (int id = 1; id <= hyturan::verify::kCriterionCount; ++id) ids.push_back(id);
  std::vector<hyturan::verify::CheckResult> results;
  for (int id : ids) {
    results.push_back(hyturan::verify::acceptance_criterion(id, opts));
    hyturan::verify::print_results({results.back()}, std::cout);
    std::cout.flush();
  }
  std::cout << "---\n";
  return hyturan::verify::print_results(results, std::cout) == 0 ? 0 : 1;
}
