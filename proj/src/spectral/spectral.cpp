#include "hyturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "solver_internal.hpp"
#include "util/parallel.hpp"

namespace hyturan {

std::string_view status_name(SolverStatus s) {
  switch (s) {
    case SolverStatus::converged:
      return "converged";
    case SolverStatus::iteration_capped:
      return "iteration-capped";
    case SolverStatus::degenerate_input:
      return "degenerate-input";
  }
  return "unknown";
}

double WeightVector::p_norm() const {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : values) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

bool WeightVector::nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; });
}

bool WeightVector::normalized(double norm_tol) const { return std::abs(p_norm() - 1.0) <= norm_tol; }

std::uint64_t factorial(std::size_t r) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= r; ++i) f *= i;
  return f;
}

namespace detail {

PolyEvaluator::PolyEvaluator(const Hypergraph& h)
    : table_(h),
      fact_r_(static_cast<double>(factorial(h.uniformity()))),
      fact_r1_(static_cast<double>(factorial(h.uniformity() - 1))),
      products_(h.size()) {}

double PolyEvaluator::value(std::span<const double> x) {
  kernels::edge_products(table_, x, products_);
  return fact_r_ * kernels::pairwise_sum(products_);
}

void PolyEvaluator::rhs(std::span<const double> x, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  kernels::accumulate_partials(table_, x, out);
  for (double& v : out) v *= fact_r1_;
}

std::vector<RunResult> run_parallel(std::size_t count, std::size_t threads,
                                    const std::function<RunResult(std::size_t)>& job) {
  std::vector<RunResult> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = job(i); });
  return out;
}

std::size_t pick_best(const std::vector<RunResult>& runs, double tie_tol, bool prefer_small_support) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& r : runs) top = std::max(top, r.lambda);
  tie_tol *= std::max(1.0, top);
  auto rounded = [](const std::vector<double>& x) {
    std::vector<long long> q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = std::llround(x[i] * 1e9);
    return q;
  };
  std::size_t best = runs.size();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].lambda < top - tie_tol) continue;
    if (best == runs.size()) {
      best = i;
      continue;
    }
    if (runs[i].converged != runs[best].converged) {
      if (runs[i].converged) best = i;
      continue;
    }
    if (prefer_small_support && runs[i].support != runs[best].support) {
      if (runs[i].support < runs[best].support) best = i;
      continue;
    }
    if (rounded(runs[i].x) < rounded(runs[best].x)) best = i;
  }
  return best;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

SolverResult finish(const Hypergraph& h, const SolverConfig& cfg, const std::vector<RunResult>& runs,
                    std::size_t best, std::size_t spread_begin) {
  SolverResult out;
  const auto& b = runs[best];
  out.vector = WeightVector{b.x, cfg.p};
  out.lambda = evaluate_poly(h, out.vector.values);
  out.iterations = b.iterations;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = spread_begin; i < runs.size(); ++i) {
    lo = std::min(lo, runs[i].lambda);
    hi = std::max(hi, runs[i].lambda);
  }
  out.restart_spread = hi - lo;
  out.restarts_agree = out.restart_spread <= 10.0 * cfg.tol * std::max(1.0, hi);
  out.status = b.converged ? SolverStatus::converged : SolverStatus::iteration_capped;
  out.residual = residual(h, cfg.p, out, std::sqrt(cfg.tol));
  return out;
}

}  // namespace detail

double evaluate_poly(const Hypergraph& h, std::span<const double> x) {
  if (x.size() != h.order()) throw ValidationError("weight vector dimension does not match vertex count");
  if (h.empty()) return 0.0;
  return detail::PolyEvaluator(h).value(x);
}

std::vector<double> eigen_rhs(const Hypergraph& h, std::span<const double> x) {
  if (x.size() != h.order()) throw ValidationError("weight vector dimension does not match vertex count");
  std::vector<double> out(h.order(), 0.0);
  if (!h.empty()) detail::PolyEvaluator(h).rhs(x, out);
  return out;
}

namespace {

constexpr double kPolishBelow = 1e-4;
constexpr std::size_t kPolishEvery = 100;
constexpr std::size_t kMaxCliqueStarts = 256;

void normalize_p(std::vector<double>& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, p);
  const double scale = s > 0.0 ? std::pow(s, -1.0 / p) : 0.0;
  for (double& v : x) v *= scale;
}

class FixedPointRun {
 public:
  FixedPointRun(const Hypergraph& h, const SolverConfig& cfg, double shift)
      : h_(h), eval_(h), cfg_(cfg), shift_(shift), threshold_(std::sqrt(cfg.tol)) {}

  detail::RunResult run(std::vector<double> x) {
    const double p = cfg_.p, expo = 1.0 / (p - 1.0);
    const std::size_t n = x.size();
    normalize_p(x, p);
    std::vector<double> g(n), y(n);
    eval_.rhs(x, g);
    double lambda = eval_.value(x);
    double shift = shift_;
    detail::RunResult out;
    std::size_t next_polish = 0;
    for (std::size_t it = 0;; ++it) {
      out.iterations = it;
      double violation = detail::support_violation(x, g, lambda, p, threshold_);
      // Near a solution the linear rate of the damped map can be poor; a
      // few Newton steps on the support finish the job.
      if (violation > cfg_.tol && violation < kPolishBelow && it >= next_polish) {
        next_polish = it + kPolishEvery;
        if (detail::newton_polish(h_, p, cfg_.tol, x, lambda)) {
          eval_.rhs(x, g);
          lambda = eval_.value(x);
          violation = detail::support_violation(x, g, lambda, p, threshold_);
        }
      }
      if (violation <= cfg_.tol) {
        out.converged = true;
        break;
      }
      if (it == cfg_.max_iter) break;
      // Shifted map; if it fails to ascend, double the shift (smaller step).
      bool accepted = false;
      for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
        for (std::size_t i = 0; i < n; ++i) {
          const double base = shift * std::pow(x[i], p - 1.0) + g[i];
          y[i] = base > 0.0 ? std::pow(base, expo) : 0.0;
        }
        normalize_p(y, p);
        const double ly = eval_.value(y);
        if (ly >= lambda - 1e-15 * std::max(1.0, lambda)) {
          accepted = true;
          x.swap(y);
          lambda = ly;
        } else {
          shift = shift > 0.0 ? 2.0 * shift : 1.0;
        }
      }
      if (!accepted) break;
      eval_.rhs(x, g);
    }
    out.lambda = lambda;
    out.x = std::move(x);
    return out;
  }

 private:
  const Hypergraph& h_;
  detail::PolyEvaluator eval_;
  const SolverConfig& cfg_;
  double shift_;
  double threshold_;
};

void validate(const SolverConfig& cfg) {
  if (!(cfg.p >= 1.0)) throw ValidationError("p must be at least 1");
  if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
  if (cfg.restarts < 1) throw ValidationError("restarts must be at least 1");
}

}  // namespace

SolverResult p_spectral_radius(const Hypergraph& h, const SolverConfig& cfg) {
  validate(cfg);
  const std::size_t n = h.order(), r = h.uniformity();
  if (cfg.p == 1.0) return lagrangian(h, cfg);
  if (h.empty()) {
    SolverResult out;
    out.vector = WeightVector{std::vector<double>(n, 0.0), cfg.p};
    return out;
  }
  if (std::isinf(cfg.p)) {
    SolverResult out;
    out.vector = WeightVector{std::vector<double>(n, 1.0), cfg.p};
    out.lambda = static_cast<double>(factorial(r)) * static_cast<double>(h.size());
    return out;
  }

  const auto deg = degrees(h);
  const double max_deg = static_cast<double>(*std::max_element(deg.begin(), deg.end()));
  const double shift = cfg.shift >= 0.0 ? cfg.shift : static_cast<double>(factorial(r - 1)) * max_deg;

  // Starts on maximal covered-pair cliques form a label-equivariant set, so
  // local maxima reached from them do not depend on the vertex numbering.
  std::vector<std::vector<Vertex>> cliques;
  if (n <= cfg.support_cap) {
    bool truncated = false;
    cliques = detail::covered_cliques(h, r, kMaxCliqueStarts, true, truncated);
    if (truncated) cliques.clear();
  }

  auto job = [&](std::size_t i) {
    std::vector<double> x0(n, 0.0);
    if (i < cliques.size()) {
      for (Vertex v : cliques[i]) x0[v] = 1.0;
      FixedPointRun run(h, cfg, shift);
      auto res = run.run(std::move(x0));
      res.support = static_cast<std::size_t>(std::count_if(res.x.begin(), res.x.end(), [](double v) { return v > 0; }));
      return res;
    }
    const std::size_t restart = i - cliques.size();
    if (restart == 0) {
      for (std::size_t i = 0; i < n; ++i) x0[i] = deg[i] > 0 ? 1.0 : 0.0;
    } else if (restart == 1) {
      for (std::size_t i = 0; i < n; ++i) x0[i] = static_cast<double>(deg[i]);
    } else {
      std::mt19937_64 rng(detail::restart_seed(cfg.seed, restart));
      std::uniform_real_distribution<double> u(0.05, 1.0);
      for (std::size_t i = 0; i < n; ++i) x0[i] = deg[i] > 0 ? u(rng) : 0.0;
    }
    FixedPointRun run(h, cfg, shift);
    auto res = run.run(std::move(x0));
    res.support = static_cast<std::size_t>(std::count_if(res.x.begin(), res.x.end(), [](double v) { return v > 0; }));
    return res;
  };
  const auto runs = detail::run_parallel(cliques.size() + cfg.restarts, cfg.threads, job);
  const std::size_t best = detail::pick_best(runs, cfg.tol, false);
  return detail::finish(h, cfg, runs, best, cliques.size());
}

double residual(const Hypergraph& h, double p, const SolverResult& candidate, double support_threshold) {
  const auto& x = candidate.vector.values;
  if (x.size() != h.order()) throw ValidationError("weight vector dimension does not match vertex count");
  if (std::isinf(p)) return 0.0;
  const std::size_t r = h.uniformity();
  const double coeff = static_cast<double>(factorial(r - 1));
  std::vector<double> rhs(h.order(), 0.0);
  for (std::size_t j = 0; j < h.size(); ++j) {
    auto e = h.edge(j);
    for (std::size_t a = 0; a < r; ++a) {
      double prod = 1.0;
      for (std::size_t b = 0; b < r; ++b)
        if (b != a) prod *= x[e[b]];
      rhs[e[a]] += prod;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= support_threshold) continue;
    const double lhs = p == 1.0 ? candidate.lambda : candidate.lambda * std::pow(x[i], p - 1.0);
    worst = std::max(worst, std::abs(lhs - coeff * rhs[i]));
  }
  return worst;
}

}  // namespace hyturan
