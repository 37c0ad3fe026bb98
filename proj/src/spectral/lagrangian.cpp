#include <algorithm>
#include <cmath>
#include <random>

#include "hyturan/spectral.hpp"
#include "solver_internal.hpp"

namespace hyturan {
namespace detail {

std::vector<std::vector<Vertex>> covered_cliques(const Hypergraph& h, std::size_t min_size, std::size_t limit,
                                                 bool maximal_only, bool& truncated) {
  const std::size_t n = h.order();
  const auto codeg = codegree_matrix(h);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  truncated = false;
  auto joinable = [&](Vertex v) {
    if (codeg[v * n + v] == 0) return false;
    for (Vertex u : current)
      if (u == v || codeg[u * n + v] == 0) return false;
    return true;
  };
  auto extend = [&](auto&& self, Vertex from) -> void {
    if (truncated) return;
    bool record = current.size() >= min_size;
    if (record && maximal_only)
      for (Vertex v = 0; v < n && record; ++v) record = !joinable(v);
    if (record) {
      if (out.size() == limit) {
        truncated = true;
        return;
      }
      out.push_back(current);
    }
    for (Vertex v = from; v < n; ++v) {
      if (codeg[v * n + v] == 0) continue;
      bool ok = true;
      for (Vertex u : current)
        if (codeg[u * n + v] == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace detail

namespace {

constexpr std::size_t kMaxSupports = 4096;

// Replicator (Baum-Eagon) ascent x_i <- x_i * rhs_i / P(x) on the simplex.
// With `abandon_below` > 0 the run stops once a coordinate of the starting
// support collapses: that optimum lives on a smaller support, which is
// enumerated separately.
detail::RunResult replicator(const Hypergraph& h, detail::PolyEvaluator& eval, std::vector<double> x,
                             const SolverConfig& cfg, double abandon_below) {
  const std::size_t n = x.size();
  double total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  const double threshold = std::sqrt(cfg.tol);
  std::vector<double> g(n);
  detail::RunResult out;
  double lambda = 0.0;
  std::size_t next_polish = 0;
  for (std::size_t it = 0;; ++it) {
    eval.rhs(x, g);
    lambda = eval.value(x);
    out.iterations = it;
    double worst = detail::support_violation(x, g, lambda, 1.0, threshold);
    if (worst > cfg.tol && worst < 1e-4 && it >= next_polish) {
      next_polish = it + 100;
      if (detail::newton_polish(h, 1.0, cfg.tol, x, lambda)) {
        eval.rhs(x, g);
        lambda = eval.value(x);
        worst = detail::support_violation(x, g, lambda, 1.0, threshold);
      }
    }
    if (worst <= cfg.tol) {
      out.converged = true;
      break;
    }
    if (it == cfg.max_iter || lambda <= 0.0) break;
    bool collapsed = false;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = x[i] * g[i] / lambda;
      if (abandon_below > 0.0 && x[i] > 0.0 && x[i] < abandon_below) collapsed = true;
    }
    double s = 0.0;
    for (double v : x) s += v;
    for (double& v : x) v /= s;
    if (collapsed) {
      lambda = eval.value(x);
      break;
    }
  }
  out.lambda = lambda;
  out.x = std::move(x);
  out.support = static_cast<std::size_t>(
      std::count_if(out.x.begin(), out.x.end(), [&](double v) { return v > threshold; }));
  return out;
}

}  // namespace

SolverResult lagrangian(const Hypergraph& h, const SolverConfig& config) {
  SolverConfig cfg = config;
  cfg.p = 1.0;
  if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
  if (cfg.restarts < 1) throw ValidationError("restarts must be at least 1");
  const std::size_t n = h.order();
  if (h.empty()) {
    SolverResult out;
    out.vector = WeightVector{std::vector<double>(n, 0.0), 1.0};
    return out;
  }

  std::vector<std::vector<Vertex>> supports;
  if (n <= cfg.support_cap) {
    bool truncated = false;
    supports = detail::covered_cliques(h, h.uniformity(), kMaxSupports, false, truncated);
    if (truncated) supports.clear();
  }
  const auto deg = degrees(h);

  auto job = [&](std::size_t i) {
    detail::PolyEvaluator eval(h);
    std::vector<double> x0(n, 0.0);
    if (i < supports.size()) {
      for (Vertex v : supports[i]) x0[v] = 1.0;
      return replicator(h, eval, std::move(x0), cfg, 1e-7);
    }
    const std::size_t restart = i - supports.size();
    if (restart == 0) {
      for (std::size_t v = 0; v < n; ++v) x0[v] = deg[v] > 0 ? 1.0 : 0.0;
    } else {
      std::mt19937_64 rng(detail::restart_seed(cfg.seed, restart));
      std::uniform_real_distribution<double> u(0.05, 1.0);
      for (std::size_t v = 0; v < n; ++v) x0[v] = deg[v] > 0 ? u(rng) : 0.0;
    }
    return replicator(h, eval, std::move(x0), cfg, 0.0);
  };
  const auto runs = detail::run_parallel(supports.size() + cfg.restarts, cfg.threads, job);
  const std::size_t best = detail::pick_best(runs, cfg.tol, true);
  return detail::finish(h, cfg, runs, best, supports.size());
}

}  // namespace hyturan
