#include <cstdio>
#include <ostream>

#include "hyturan/verify.hpp"

namespace hyturan::verify {

std::size_t print_results(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", r.seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << time << "): " << r.detail
        << '\n';
  }
  out << results.size() - failures << "/" << results.size() << " passed\n";
  return failures;
}

}  // namespace hyturan::verify
