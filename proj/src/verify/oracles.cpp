#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "hyturan/construct.hpp"
#include "hyturan/verify.hpp"

namespace hyturan::verify {

std::vector<NamedGraph> generator_corpus() {
  std::vector<NamedGraph> c;
  auto add = [&](std::string name, Hypergraph g) { c.push_back({std::move(name), std::move(g)}); };
  for (auto [n, k, r] : std::vector<std::array<std::size_t, 3>>{
           {6, 3, 3}, {7, 3, 3}, {9, 3, 3}, {12, 3, 3}, {5, 2, 2}, {6, 3, 2}, {8, 4, 3}, {8, 4, 4}})
    add("T_" + std::to_string(r) + "(" + std::to_string(n) + "," + std::to_string(k) + ")", turan_hypergraph(n, k, r));
  for (auto [t, r] : std::vector<std::array<std::size_t, 2>>{
           {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {4, 4}, {5, 4}, {6, 4}})
    add("K_" + std::to_string(t) + "^" + std::to_string(r), complete_r_graph(t, r));
  for (auto [t, r] : std::vector<std::array<std::size_t, 2>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}, {4, 4}})
    add("H_" + std::to_string(t) + "^" + std::to_string(r), expanded_clique(t, r));
  add("H_4^3 shared", expanded_clique(4, 3, Enlargement::shared));
  for (auto [t, r] : std::vector<std::array<std::size_t, 2>>{{3, 2}, {4, 3}, {5, 3}, {5, 4}})
    add("F_" + std::to_string(t) + "^" + std::to_string(r), generalized_fan(t, r));
  const std::vector<std::pair<std::vector<std::size_t>, std::size_t>> parts{
      {{1, 2, 3}, 3}, {{2, 2, 2}, 3}, {{2, 3, 4, 2}, 3}, {{1, 1, 2, 2}, 4}};
  for (const auto& [sizes, r] : parts) add("complete_k_partite", complete_k_partite(sizes, r));
  for (std::size_t n : {3, 4, 5, 6, 7, 8, 9, 12}) add("G_" + std::to_string(n) + "^1", semibipartite_max(n));
  add("G_6^2", g62());
  const std::vector<std::size_t> twos(6, 2);
  add("G_6^2 blow-up (2,...,2)", g62_blowup(twos));
  add("G_7^2", g62_balanced(7));
  add("G_12^2", g62_balanced(12));
  add("M1", m1_pattern());
  const std::vector<std::size_t> sizes{1, 2, 1, 2};
  add("K_4^3 blow-up (1,2,1,2)", blow_up(complete_r_graph(4, 3), sizes));
  return c;
}

std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> c;
  for (auto& g : generator_corpus())
    if (g.graph.order() <= 6) c.push_back(std::move(g));
  std::uint64_t seed = 1;
  for (std::size_t r = 2; r <= 4; ++r)
    for (std::size_t n = r; n <= 6; ++n)
      for (int rep = 0; rep < 2; ++rep) {
        Hypergraph g = random_hypergraph(n, r, 0.55, seed++);
        if (!g.empty())
          c.push_back({"random r=" + std::to_string(r) + " n=" + std::to_string(n) + " #" + std::to_string(rep),
                       std::move(g)});
      }
  return c;
}

double jacobi_largest_eigenvalue(std::vector<double> a, std::size_t n) {
  if (n == 0) return 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
  }
  double top = a[0];
  for (std::size_t i = 1; i < n; ++i) top = std::max(top, a[i * n + i]);
  return top;
}

double adjacency_spectral_radius(const Hypergraph& g) {
  if (g.uniformity() != 2) throw ValidationError("adjacency matrix needs a 2-graph");
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto e = g.edge(j);
    a[e[0] * n + e[1]] = a[e[1] * n + e[0]] = 1.0;
  }
  return jacobi_largest_eigenvalue(std::move(a), n);
}

bool brute_force_berge(const Hypergraph& h, std::size_t t) {
  bool found = false;
  for_each_combination(h.order(), t, [&](std::span<const Vertex> core) {
    if (found) return;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b) pairs.emplace_back(core[a], core[b]);
    std::vector<char> used(h.size(), 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t q) {
      if (q == pairs.size()) return true;
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (used[j]) continue;
        auto e = h.edge(j);
        const bool has_u = std::find(e.begin(), e.end(), pairs[q].first) != e.end();
        const bool has_v = std::find(e.begin(), e.end(), pairs[q].second) != e.end();
        if (!has_u || !has_v) continue;
        used[j] = 1;
        if (assign(q + 1)) return true;
        used[j] = 0;
      }
      return false;
    };
    found = assign(0);
  });
  return found;
}

std::size_t brute_force_class_count(std::size_t n, std::size_t r) {
  std::vector<Edge> slots;
  for_each_combination(n, r, [&](std::span<const Vertex> c) { slots.emplace_back(c.begin(), c.end()); });
  const std::size_t s = slots.size();
  if (s > 20) throw CapacityError("brute_force_class_count: too many slots");
  auto slot_of = [&](Edge e) {
    std::sort(e.begin(), e.end());
    return static_cast<std::size_t>(std::lower_bound(slots.begin(), slots.end(), e) - slots.begin());
  };
  std::vector<std::vector<std::size_t>> maps;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> m(s);
    for (std::size_t i = 0; i < s; ++i) {
      Edge e = slots[i];
      for (Vertex& v : e) v = perm[v];
      m[i] = slot_of(e);
    }
    maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
    std::uint32_t best = mask;
    for (const auto& m : maps) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < s; ++i)
        if (mask >> i & 1U) image |= std::uint32_t{1} << m[i];
      best = std::min(best, image);
    }
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace hyturan::verify
