#pragma once

#include <cstdint>
#include <vector>

#include "hyturan/detect.hpp"

namespace hyturan::detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

/// covered[v] has bit u set iff u != v share an edge. Throws CapacityError
/// above kDetectMaxOrder.
std::vector<Mask> covered_masks(const Hypergraph& h);

/// Counts backtracking nodes against a budget.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  /// False once the budget is spent.
  bool tick() { return ++used_ <= limit_; }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace hyturan::detail
