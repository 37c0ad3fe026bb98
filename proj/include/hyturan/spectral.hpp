#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

/// Nonnegative vertex weights together with the norm they are measured in.
struct WeightVector {
  std::vector<double> values;
  double p = 2.0;

  double p_norm() const;
  bool nonnegative() const;
  bool normalized(double norm_tol) const;
};

struct SolverConfig {
  double p = 2.0;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  /// Damping constant for the fixed-point map; negative selects
  /// (r-1)! * max degree.
  double shift = -1.0;
  std::size_t threads = 1;
  /// Lagrangian: largest vertex count for which candidate supports (cliques
  /// of the covered-pair graph) are enumerated exhaustively.
  std::size_t support_cap = 12;
};

enum class SolverStatus { converged, iteration_capped, degenerate_input };
std::string_view status_name(SolverStatus s);

struct SolverResult {
  double lambda = 0.0;
  WeightVector vector;
  double residual = 0.0;
  std::size_t iterations = 0;
  SolverStatus status = SolverStatus::converged;
  /// Largest minus smallest restart value; the estimate is reported as the
  /// radius only when every restart lands within tolerance of the best.
  double restart_spread = 0.0;
  bool restarts_agree = true;
};

std::uint64_t factorial(std::size_t r);

/// P_H(x) = r! * sum_e prod_{v in e} x_v, pairwise-summed.
double evaluate_poly(const Hypergraph& h, std::span<const double> x);

/// (r-1)! * sum_{e containing i} prod_{j in e \ {i}} x_j for every i, i.e.
/// the right-hand side of the eigen-equation.
std::vector<double> eigen_rhs(const Hypergraph& h, std::span<const double> x);

/// lambda^(p)(H) by multistart shifted fixed-point iteration (p > 1); p == 1
/// is routed to lagrangian(), p == infinity returns r! * m.
SolverResult p_spectral_radius(const Hypergraph& h, const SolverConfig& config);

/// Lagrangian lambda^(1)(H): maximum of P_H over the standard simplex.
SolverResult lagrangian(const Hypergraph& h, const SolverConfig& config);

/// max over x_i > 0 (x_i > sqrt(tol) in practice, see below) of
/// |lambda * x_i^(p-1) - (r-1)! sum_{e containing i} prod_{e \ i} x_j|.
/// Evaluated with a direct edge loop, not the solver kernels.
double residual(const Hypergraph& h, double p, const SolverResult& candidate, double support_threshold = 1e-5);

double size_upper_bound(std::uint64_t m, std::size_t r, double p);
double turan_lower_bound(std::size_t n, std::size_t k, std::size_t r, double p);
/// (k)_r / k^r.
double maclaurin_bound(std::size_t k, std::size_t r);
double lambda_upper_from_density(std::uint64_t m, std::size_t r, double p, double density);
/// 4 n^{3(1-1/p)} / 9.
double spex_m_upper_bound(std::size_t n, double p);

struct WeylOutcome {
  bool holds = false;
  double whole = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// Splits the edges of H by `in_first` (one flag per edge, canonical order)
/// and checks lambda(H) <= lambda(H1) + lambda(H2) + 3 tol with solver
/// estimates.
WeylOutcome weyl_check(const Hypergraph& h, const std::vector<bool>& in_first, const SolverConfig& config);

inline constexpr std::size_t kOracleMaxOrder = 6;

/// Brute force: simplex grid in y = x^p coordinates with at least 1e5
/// points, best grid points refined by exact pairwise line searches.
/// Independent of the solver code path. Throws CapacityError above n = 6.
double oracle_p_spectral(const Hypergraph& h, double p);

}  // namespace hyturan
