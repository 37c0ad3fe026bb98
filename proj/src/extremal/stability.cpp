#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "hyturan/extremal.hpp"

namespace hyturan {
namespace {

// Elementary symmetric polynomial e_j of the given class sizes.
std::uint64_t esym(const std::vector<std::uint64_t>& sizes, std::size_t j) {
  std::vector<std::uint64_t> e(j + 1, 0);
  e[0] = 1;
  for (std::uint64_t s : sizes)
    for (std::size_t i = j; i >= 1; --i) e[i] += e[i - 1] * s;
  return e[j];
}

class Scorer {
 public:
  explicit Scorer(const Hypergraph& h) : h_(h), incident_(h.order()) {
    for (std::size_t j = 0; j < h.size(); ++j)
      for (Vertex v : h.edge(j)) incident_[v].push_back(j);
  }

  std::uint64_t edge_classes(std::size_t j, const std::vector<std::size_t>& a) const {
    std::uint64_t mask = 0;
    for (Vertex v : h_.edge(j)) mask |= std::uint64_t{1} << a[v];
    return static_cast<std::uint64_t>(std::popcount(mask));
  }

  std::uint64_t score(const std::vector<std::size_t>& a) const {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < h_.size(); ++j) s += edge_classes(j, a);
    return s;
  }

  // Score change from moving v to class c.
  long long gain(std::vector<std::size_t>& a, Vertex v, std::size_t c) const {
    long long before = 0, after = 0;
    for (std::size_t j : incident_[v]) before += static_cast<long long>(edge_classes(j, a));
    const std::size_t old = a[v];
    a[v] = c;
    for (std::size_t j : incident_[v]) after += static_cast<long long>(edge_classes(j, a));
    a[v] = old;
    return after - before;
  }

 private:
  const Hypergraph& h_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct Candidate {
  std::uint64_t score = 0;
  std::vector<std::size_t> assignment;
};

void offer(Candidate& best, bool& have, std::uint64_t score, const std::vector<std::size_t>& a, std::size_t k) {
  const auto norm = Partition(k, a).normalized().assignment;
  if (!have || score > best.score || (score == best.score && norm < best.assignment)) {
    best.score = score;
    best.assignment = norm;
    have = true;
  }
}

// Restricted-growth strings in lexicographic order; strict improvement keeps
// the lexicographically smallest maximizer.
Candidate exact_partition(const Scorer& scorer, std::size_t n, std::size_t k) {
  Candidate best;
  bool have = false;
  std::vector<std::size_t> a(n, 0);
  auto rec = [&](auto&& self, std::size_t v, std::size_t used) -> void {
    if (v == n) {
      const std::uint64_t s = scorer.score(a);
      if (!have || s > best.score) {
        best.score = s;
        best.assignment = a;
        have = true;
      }
      return;
    }
    for (std::size_t c = 0; c <= std::min(used, k - 1); ++c) {
      a[v] = c;
      self(self, v + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

Candidate ascent_partition(const Scorer& scorer, std::size_t n, std::size_t k, const StabilityOptions& opt) {
  Candidate best;
  bool have = false;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t restart = 0; restart < std::max<std::size_t>(opt.restarts, 1); ++restart) {
    std::vector<std::size_t> a(n);
    for (std::size_t v = 0; v < n; ++v) a[v] = restart == 0 ? v * k / std::max<std::size_t>(n, 1) : pick(rng);
    while (true) {
      long long top = 0;
      Vertex bv = 0;
      std::size_t bc = 0;
      for (Vertex v = 0; v < n; ++v)
        for (std::size_t c = 0; c < k; ++c) {
          if (c == a[v]) continue;
          const long long g = scorer.gain(a, v, c);
          if (g > top) {
            top = g;
            bv = v;
            bc = c;
          }
        }
      if (top <= 0) break;
      a[bv] = bc;
    }
    offer(best, have, scorer.score(a), a, k);
  }
  return best;
}

}  // namespace

std::uint64_t codegree_threshold(std::size_t n, std::size_t k, std::size_t r) {
  if (r < 3) return 0;
  return (k + 1 + (r - 2) * binomial(k + 1, 2)) * binomial(n, r - 3);
}

StabilityReport stability_report(const Hypergraph& h, std::size_t k, double epsilon, const StabilityOptions& options) {
  const std::size_t n = h.order(), r = h.uniformity();
  if (k < r) throw ValidationError("stability_report needs k >= r");
  if (k > 64) throw ValidationError("stability_report supports at most 64 classes");
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");

  StabilityReport rep;
  rep.k = k;
  rep.epsilon = epsilon;
  const Scorer scorer(h);
  const double space = std::pow(static_cast<double>(k), static_cast<double>(n));
  rep.exact = space <= static_cast<double>(options.exact_limit);
  const Candidate best = rep.exact ? exact_partition(scorer, n, k) : ascent_partition(scorer, n, k, options);
  rep.best_partition = Partition(k, best.assignment);
  rep.score = best.score;
  const auto& a = best.assignment;

  std::vector<std::uint64_t> sizes(k, 0);
  for (std::size_t c : a) ++sizes[c];
  auto sizes_without = [&](std::initializer_list<std::size_t> skip) {
    std::vector<std::uint64_t> out;
    for (std::size_t c = 0; c < k; ++c)
      if (std::find(skip.begin(), skip.end(), c) == skip.end()) out.push_back(sizes[c]);
    return out;
  };

  // Missing edges via counting: crossing r-sets minus crossing edges of H.
  std::vector<std::uint64_t> good_at(n, 0);
  std::size_t good = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (scorer.edge_classes(j, a) == r) {
      ++good;
      for (Vertex v : h.edge(j)) ++good_at[v];
    } else {
      ++rep.bad;
    }
  }
  rep.missing = static_cast<std::size_t>(esym(sizes, r) - good);
  rep.edit_distance_to_turan = rep.missing + rep.bad;

  rep.codegree_threshold = codegree_threshold(n, k, r);
  const double rr = static_cast<double>(r * r);
  rep.threshold_l = std::pow(epsilon, 1.0 / rr) * static_cast<double>(n);
  rep.threshold_m = std::pow(epsilon, 5.0 / (4.0 * rr)) * std::pow(static_cast<double>(n), static_cast<double>(r) - 1.0);

  const auto codeg = codegree_matrix(h);
  std::vector<std::size_t> sparse_at(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (a[u] == a[v]) continue;
      const std::uint64_t c = codeg[u * n + v];
      const std::uint64_t full = esym(sizes_without({a[u], a[v]}), r - 2);
      if (c <= rep.codegree_threshold && c < full) {
        rep.sparse_pairs.emplace_back(u, v);
        ++sparse_at[u];
        ++sparse_at[v];
      }
    }
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(sparse_at[v]) >= rep.threshold_l) rep.heavy_sparse_vertices.push_back(v);
    const std::uint64_t missing_v = esym(sizes_without({a[v]}), r - 1) - good_at[v];
    if (static_cast<double>(missing_v) >= rep.threshold_m) rep.heavy_missing_vertices.push_back(v);
  }
  return rep;
}

}  // namespace hyturan
