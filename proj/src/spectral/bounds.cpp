#include <cmath>

#include "hyturan/construct.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan {

double size_upper_bound(std::uint64_t m, std::size_t r, double p) {
  return std::pow(static_cast<double>(factorial(r)) * static_cast<double>(m), 1.0 - 1.0 / p);
}

double turan_lower_bound(std::size_t n, std::size_t k, std::size_t r, double p) {
  // P_H at the uniform vector n^{-1/p}(1, ..., 1) of T_r(n,k).
  return static_cast<double>(factorial(r)) * static_cast<double>(turan_count(n, k, r)) /
         std::pow(static_cast<double>(n), static_cast<double>(r) / p);
}

double maclaurin_bound(std::size_t k, std::size_t r) {
  if (k < r) return 0.0;
  double out = 1.0;
  for (std::size_t i = 0; i < r; ++i) out *= static_cast<double>(k - i) / static_cast<double>(k);
  return out;
}

double lambda_upper_from_density(std::uint64_t m, std::size_t r, double p, double density) {
  return size_upper_bound(m, r, p) * std::pow(density, 1.0 / p);
}

double spex_m_upper_bound(std::size_t n, double p) {
  return 4.0 * std::pow(static_cast<double>(n), 3.0 * (1.0 - 1.0 / p)) / 9.0;
}

WeylOutcome weyl_check(const Hypergraph& h, const std::vector<bool>& in_first, const SolverConfig& config) {
  if (in_first.size() != h.size()) throw ValidationError("weyl_check: need one flag per edge");
  std::vector<Edge> first, second;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    (in_first[i] ? first : second).emplace_back(e.begin(), e.end());
  }
  WeylOutcome out;
  out.whole = p_spectral_radius(h, config).lambda;
  out.first = p_spectral_radius(Hypergraph(h.order(), h.uniformity(), std::move(first)), config).lambda;
  out.second = p_spectral_radius(Hypergraph(h.order(), h.uniformity(), std::move(second)), config).lambda;
  out.holds = out.whole <= out.first + out.second + 3.0 * config.tol;
  return out;
}

}  // namespace hyturan
