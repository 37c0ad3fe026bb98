#pragma once

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "hyturan/verify.hpp"

namespace hyturan::verify::detail {

inline std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Records the first failure message and counts checks.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& first_failure() const { return first_; }

  /// "N checks" or "F/N failed, first: ...".
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + "/" + std::to_string(checks_) + " failed, first: " + first_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

inline CheckResult finish(std::string id, std::string title, const Tally& tally, std::string detail,
                          const Stopwatch& clock, double limit_seconds) {
  CheckResult out;
  out.id = std::move(id);
  out.title = std::move(title);
  out.seconds = clock.seconds();
  const bool in_time = out.seconds <= limit_seconds;
  out.passed = tally.ok() && in_time;
  out.detail = detail.empty() ? tally.summary() : tally.summary() + "; " + detail;
  if (!in_time) out.detail += format("; exceeded time limit %.0f s", limit_seconds);
  return out;
}

}  // namespace hyturan::verify::detail
