#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "hyturan/spectral.hpp"

namespace hyturan {
namespace {

constexpr std::size_t kGridTarget = 100000;
constexpr std::size_t kRefined = 32;
constexpr std::size_t kMaxSweeps = 5000;

// Deliberately naive: the oracle must not share code with the solver.
double naive_poly(const Hypergraph& h, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    double prod = 1.0;
    for (Vertex v : h.edge(j)) prod *= x[v];
    s += prod;
  }
  return static_cast<double>(factorial(h.uniformity())) * s;
}

std::size_t grid_resolution(std::size_t n) {
  std::size_t res = 1;
  while (binomial(res + n - 1, n - 1) < kGridTarget) ++res;
  return res;
}

void to_x(const std::vector<double>& y, double p, std::vector<double>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::pow(y[i], 1.0 / p);
}

// Maximizes over y_i + y_j = c with the other coordinates fixed. In x the
// polynomial is A + B x_i + C x_j + D x_i x_j with B, C, D >= 0, and with
// x = y^(1/p) every term is concave in y_i, so golden section is exact.
bool pair_step(const Hypergraph& h, double p, std::vector<double>& y, std::size_t i, std::size_t j,
               double& best) {
  const double c = y[i] + y[j];
  if (c <= 0.0) return false;
  std::vector<double> x(y.size());
  to_x(y, p, x);
  auto at = [&](double xi, double xj) {
    x[i] = xi;
    x[j] = xj;
    return naive_poly(h, x);
  };
  const double a = at(0, 0);
  const double b = at(1, 0) - a;
  const double cc = at(0, 1) - a;
  const double d = at(1, 1) - a - b - cc;
  const double inv = 1.0 / p;
  auto f = [&](double t) {
    const double u = c - t;
    return a + b * std::pow(t, inv) + cc * std::pow(u, inv) + d * std::pow(t * u, inv);
  };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = c;
  double m1 = hi - phi * (hi - lo), m2 = lo + phi * (hi - lo);
  double f1 = f(m1), f2 = f(m2);
  while (hi - lo > 1e-15 * std::max(1.0, c)) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + phi * (hi - lo);
      f2 = f(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - phi * (hi - lo);
      f1 = f(m1);
    }
  }
  double t = 0.5 * (lo + hi);
  double ft = f(t);
  for (double cand : {0.0, c}) {
    if (f(cand) > ft) {
      t = cand;
      ft = f(cand);
    }
  }
  const std::vector<double> saved = y;
  y[i] = t;
  y[j] = c - t;
  to_x(y, p, x);
  const double value = naive_poly(h, x);
  if (value > best) {
    best = value;
    return true;
  }
  y = saved;
  return false;
}

double refine(const Hypergraph& h, double p, std::vector<double> y) {
  const std::size_t n = y.size();
  std::vector<double> x(n);
  to_x(y, p, x);
  double best = naive_poly(h, x);
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double before = best;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pair_step(h, p, y, i, j, best);
    if (best - before <= 1e-15 * std::max(1.0, best)) break;
  }
  return best;
}

}  // namespace

double oracle_p_spectral(const Hypergraph& h, double p) {
  const std::size_t n = h.order();
  if (n > kOracleMaxOrder) throw CapacityError("oracle_p_spectral: n > 6");
  if (!(p >= 1.0)) throw ValidationError("p must be at least 1");
  if (h.empty()) return 0.0;
  if (std::isinf(p)) return static_cast<double>(factorial(h.uniformity())) * static_cast<double>(h.size());

  // Grid over the simplex in y = x^p: compositions of `res` into n parts.
  const std::size_t res = grid_resolution(n);
  using Scored = std::pair<double, std::vector<double>>;
  auto worse = [](const Scored& a, const Scored& b) { return a.first > b.first; };
  std::priority_queue<Scored, std::vector<Scored>, decltype(worse)> top(worse);
  std::vector<std::size_t> parts(n, 0);
  std::vector<double> y(n), x(n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t left) {
    if (i + 1 == n) {
      parts[i] = left;
      for (std::size_t v = 0; v < n; ++v) y[v] = static_cast<double>(parts[v]) / static_cast<double>(res);
      to_x(y, p, x);
      const double value = naive_poly(h, x);
      if (top.size() < kRefined) {
        top.emplace(value, y);
      } else if (value > top.top().first) {
        top.pop();
        top.emplace(value, y);
      }
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      parts[i] = k;
      walk(i + 1, left - k);
    }
  };
  walk(0, res);

  double best = 0.0;
  while (!top.empty()) {
    best = std::max(best, refine(h, p, top.top().second));
    top.pop();
  }
  return best;
}

}  // namespace hyturan
