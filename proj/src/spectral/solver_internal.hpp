#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hyturan/kernels.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan::detail {

/// P_H and its eigen-equation right-hand side through the SIMD kernels.
class PolyEvaluator {
 public:
  explicit PolyEvaluator(const Hypergraph& h);

  double value(std::span<const double> x);
  /// rhs[i] = (r-1)! sum_{e containing i} prod_{e \ i} x_j.
  void rhs(std::span<const double> x, std::span<double> out);

 private:
  kernels::EdgeTable table_;
  double fact_r_;
  double fact_r1_;
  std::vector<double> products_;
};

/// Outcome of one restart.
struct RunResult {
  double lambda = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t support = 0;
};

/// Runs `count` independent jobs on up to `threads` workers; results are
/// indexed by job so the merge is independent of scheduling.
std::vector<RunResult> run_parallel(std::size_t count, std::size_t threads,
                                    const std::function<RunResult(std::size_t)>& job);

/// Highest lambda; among values within tie_tol * max(1, best) of the best,
/// converged runs first, then smallest support (when `prefer_small_support`),
/// then lexicographically smallest vector rounded to 1e-9.
std::size_t pick_best(const std::vector<RunResult>& runs, double tie_tol, bool prefer_small_support);

/// Packages the chosen run: lambda re-evaluated with pairwise summation,
/// independent residual, spread over runs[spread_begin..].
SolverResult finish(const Hypergraph& h, const SolverConfig& cfg, const std::vector<RunResult>& runs,
                    std::size_t best, std::size_t spread_begin = 0);

/// max over x_i > threshold of |lambda x_i^(p-1) - rhs_i|.
double support_violation(std::span<const double> x, std::span<const double> rhs, double lambda, double p,
                         double threshold);

/// Newton steps on the eigen-equation restricted to the support of x
/// (coordinates above sqrt(tol); the rest are set to zero) with the unit
/// p-norm as the extra equation. Updates (x, lambda) and returns true only
/// when the polished point does not lose value and has a smaller violation.
bool newton_polish(const Hypergraph& h, double p, double tol, std::vector<double>& x, double& lambda);

/// Cliques (size >= min_size) of the covered-pair graph, in lexicographic
/// DFS order; by the Frankl-Rodl support lemma an optimal Lagrangian
/// weighting exists on one of them. Sets `truncated` past `limit` results.
std::vector<std::vector<Vertex>> covered_cliques(const Hypergraph& h, std::size_t min_size, std::size_t limit,
                                                 bool maximal_only, bool& truncated);

/// Per-restart RNG seed.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart);

}  // namespace hyturan::detail
