#include <algorithm>
#include <cmath>

#include "solver_internal.hpp"

namespace hyturan::detail {
namespace {

constexpr std::size_t kPolishMaxSupport = 400;
constexpr int kPolishSteps = 12;

double p_sum(const std::vector<double>& z, double p) {
  double s = 0.0;
  for (double v : z) s += p == 1.0 ? v : std::pow(v, p);
  return s;
}

// Solves a x = b in place by Gaussian elimination with partial pivoting.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < k; ++i)
      if (std::abs(a[i * k + c]) > std::abs(a[piv * k + c])) piv = i;
    if (std::abs(a[piv * k + c]) < 1e-300) return false;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[c * k + j], a[piv * k + j]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      const double f = a[i * k + c] / a[c * k + c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < k; ++j) a[i * k + j] -= f * a[c * k + j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t c = k; c-- > 0;) {
    double s = b[c];
    for (std::size_t j = c + 1; j < k; ++j) s -= a[c * k + j] * b[j];
    b[c] = s / a[c * k + c];
  }
  return true;
}

}  // namespace

double support_violation(std::span<const double> x, std::span<const double> rhs, double lambda, double p,
                         double threshold) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= threshold) continue;
    const double lhs = p == 1.0 ? lambda : lambda * std::pow(x[i], p - 1.0);
    worst = std::max(worst, std::abs(lhs - rhs[i]));
  }
  return worst;
}

bool newton_polish(const Hypergraph& h, double p, double tol, std::vector<double>& x, double& lambda) {
  const std::size_t n = x.size(), r = h.uniformity();
  const double threshold = std::sqrt(tol);
  std::vector<std::size_t> support, pos(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > threshold) {
      pos[i] = support.size();
      support.push_back(i);
    }
  const std::size_t k = support.size();
  if (k == 0 || k > kPolishMaxSupport) return false;

  // Only edges inside the support matter for the restricted system.
  std::vector<std::size_t> inner;
  for (std::size_t j = 0; j < h.size(); ++j) {
    auto e = h.edge(j);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return pos[v] < n; })) inner.push_back(j);
  }
  const double fact = static_cast<double>(factorial(r - 1));
  std::vector<double> z(n, 0.0);
  for (std::size_t i : support) z[i] = x[i];
  auto normalize = [&] {
    const double s = p_sum(z, p);
    const double scale = p == 1.0 ? 1.0 / s : std::pow(s, -1.0 / p);
    for (double& v : z) v *= scale;
  };
  std::vector<double> g(n), hess(k * k), jac((k + 1) * (k + 1)), rhs(k + 1);
  auto gradient = [&](bool with_hessian) {
    std::fill(g.begin(), g.end(), 0.0);
    if (with_hessian) std::fill(hess.begin(), hess.end(), 0.0);
    for (std::size_t j : inner) {
      auto e = h.edge(j);
      for (std::size_t a = 0; a < r; ++a) {
        double prod = 1.0;
        for (std::size_t c = 0; c < r; ++c)
          if (c != a) prod *= z[e[c]];
        g[e[a]] += fact * prod;
        if (!with_hessian) continue;
        for (std::size_t b = a + 1; b < r; ++b) {
          double pb = 1.0;
          for (std::size_t c = 0; c < r; ++c)
            if (c != a && c != b) pb *= z[e[c]];
          hess[pos[e[a]] * k + pos[e[b]]] += fact * pb;
          hess[pos[e[b]] * k + pos[e[a]]] += fact * pb;
        }
      }
    }
  };
  auto value = [&] {
    double s = 0.0;
    for (std::size_t i : support) s += z[i] * g[i];
    return s;
  };

  normalize();
  gradient(false);
  double lam = value();
  // Reference violation of the unpolished point, over all edges.
  std::vector<double> gx(n, 0.0);
  for (std::size_t j = 0; j < h.size(); ++j) {
    auto e = h.edge(j);
    for (std::size_t a = 0; a < r; ++a) {
      double prod = 1.0;
      for (std::size_t c = 0; c < r; ++c)
        if (c != a) prod *= x[e[c]];
      gx[e[a]] += fact * prod;
    }
  }
  const double before = support_violation(x, gx, lambda, p, threshold);

  for (int step = 0; step < kPolishSteps; ++step) {
    gradient(true);
    if (support_violation(z, g, lam, p, threshold) <= tol / 16.0) break;
    const std::size_t K = k + 1;
    std::fill(jac.begin(), jac.end(), 0.0);
    double norm_gap = -1.0;
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t i = support[a];
      for (std::size_t b = 0; b < k; ++b) jac[a * K + b] = hess[a * k + b];
      if (p != 1.0) jac[a * K + a] -= lam * (p - 1.0) * std::pow(z[i], p - 2.0);
      jac[a * K + k] = p == 1.0 ? -1.0 : -std::pow(z[i], p - 1.0);
      jac[k * K + a] = p == 1.0 ? 1.0 : p * std::pow(z[i], p - 1.0);
      rhs[a] = -(g[i] - (p == 1.0 ? lam : lam * std::pow(z[i], p - 1.0)));
      norm_gap += p == 1.0 ? z[i] : std::pow(z[i], p);
    }
    rhs[k] = -norm_gap;
    if (!solve_dense(jac, rhs, K)) return false;
    for (std::size_t a = 0; a < k; ++a) {
      z[support[a]] += rhs[a];
      if (!(z[support[a]] > 0.0)) return false;
    }
    normalize();
    gradient(false);
    lam = value();
  }
  gradient(false);
  lam = value();
  const double after = support_violation(z, g, lam, p, threshold);
  if (!(lam >= lambda - 1e-12 * std::max(1.0, std::abs(lambda))) || !(after < before)) return false;
  x = std::move(z);
  lambda = lam;
  return true;
}

}  // namespace hyturan::detail
