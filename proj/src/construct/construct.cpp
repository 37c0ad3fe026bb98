#include "hyturan/construct.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace hyturan {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::vector<Edge> all_r_subsets(std::size_t n, std::size_t r) {
  std::vector<Edge> out;
  for_each_combination(n, r, [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

}  // namespace

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t k) {
  require(k >= 1, "k must be positive");
  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 1; i <= k; ++i) sizes[i - 1] = (n + i - 1) / k;
  return sizes;
}

std::uint64_t turan_count(std::size_t n, std::size_t k, std::size_t r) {
  require(n >= 1, "turan_count: n must be positive");
  require(r >= 2 && k >= r, "turan_count: requires k >= r >= 2");
  const auto sizes = turan_part_sizes(n, k);
  std::uint64_t total = 0;
  for_each_combination(k, r, [&](std::span<const Vertex> s) {
    std::uint64_t prod = 1;
    for (Vertex i : s) prod *= sizes[i];
    total += prod;
  });
  return total;
}

Hypergraph complete_k_partite(std::span<const std::size_t> sizes, std::size_t r) {
  require(r >= 2, "complete_k_partite: r must be at least 2");
  require(sizes.size() >= r, "complete_k_partite: needs at least r parts");
  for (std::size_t s : sizes) require(s >= 1, "complete_k_partite: part sizes must be positive");
  // The complete r-graph on the k parts, blown up by the part sizes.
  Hypergraph base(sizes.size(), r, all_r_subsets(sizes.size(), r));
  return blow_up(base, sizes);
}

Partition block_partition(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> assign;
  for (std::size_t i = 0; i < sizes.size(); ++i) assign.insert(assign.end(), sizes[i], i);
  return Partition(sizes.size(), std::move(assign));
}

Hypergraph turan_hypergraph(std::size_t n, std::size_t k, std::size_t r) {
  require(r >= 2 && k >= r && n >= k, "turan_hypergraph: requires n >= k >= r >= 2");
  return complete_k_partite(turan_part_sizes(n, k), r);
}

Partition turan_partition(std::size_t n, std::size_t k) {
  require(n >= k && k >= 1, "turan_partition: requires n >= k >= 1");
  return block_partition(turan_part_sizes(n, k));
}

Hypergraph complete_r_graph(std::size_t t, std::size_t r) {
  require(r >= 2 && t >= r, "complete_r_graph: requires t >= r >= 2");
  return Hypergraph(t, r, all_r_subsets(t, r));
}

Hypergraph expanded_clique(std::size_t t, std::size_t r, Enlargement mode) {
  require(r >= 2 && t >= r, "expanded_clique: requires t >= r >= 2");
  const std::size_t pairs = t * (t - 1) / 2;
  const std::size_t extra = mode == Enlargement::disjoint ? (r - 2) * pairs : r - 2;
  std::vector<Edge> edges;
  std::size_t q = 0;
  for_each_combination(t, 2, [&](std::span<const Vertex> p) {
    Edge e{p[0], p[1]};
    const std::size_t base = t + (mode == Enlargement::disjoint ? (r - 2) * q : 0);
    for (std::size_t j = 0; j < r - 2; ++j) e.push_back(static_cast<Vertex>(base + j));
    edges.push_back(std::move(e));
    ++q;
  });
  return Hypergraph(t + extra, r, std::move(edges));
}

Hypergraph generalized_fan(std::size_t t, std::size_t r) {
  require(r >= 2 && t >= r, "generalized_fan: requires t >= r >= 2");
  std::vector<Edge> edges;
  Edge inner;
  for (std::size_t i = 0; i < r; ++i) inner.push_back(static_cast<Vertex>(i));
  edges.push_back(inner);
  std::size_t next = t;
  for_each_combination(t, 2, [&](std::span<const Vertex> p) {
    if (p[1] < r) return;  // pair already inside {0..r-1}
    Edge e{p[0], p[1]};
    for (std::size_t j = 0; j < r - 2; ++j) e.push_back(static_cast<Vertex>(next++));
    edges.push_back(std::move(e));
  });
  return Hypergraph(next, r, std::move(edges));
}

Hypergraph semibipartite_max(std::size_t n) {
  require(n >= 3, "semibipartite_max: requires n >= 3");
  const std::size_t a = n / 3;
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < a; ++x)
    for_each_combination(n - a, 2, [&](std::span<const Vertex> p) {
      edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(a + p[0]), static_cast<Vertex>(a + p[1])});
    });
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph g62() {
  const std::vector<Edge> complement{{0, 1, 2}, {0, 1, 5}, {2, 3, 4}, {3, 4, 5}};
  std::vector<Edge> edges;
  for (auto& e : all_r_subsets(6, 3))
    if (std::find(complement.begin(), complement.end(), e) == complement.end()) edges.push_back(e);
  return Hypergraph(6, 3, std::move(edges));
}

Hypergraph g62_blowup(std::span<const std::size_t> part_sizes) {
  require(part_sizes.size() == 6, "g62_blowup: needs 6 part sizes");
  for (std::size_t s : part_sizes) require(s >= 1, "g62_blowup: part sizes must be positive");
  return blow_up(g62(), part_sizes);
}

std::array<std::size_t, 6> g62_balanced_sizes(std::size_t n) {
  require(n >= 6, "g62_balanced_sizes: requires n >= 6");
  const std::size_t base = n / 6, extra = n % 6;
  const Hypergraph g = g62();
  std::array<std::size_t, 6> best{};
  std::uint64_t best_edges = 0;
  bool found = false;
  // Exhaustive over the C(6, n mod 6) ways to place the ceilings; ties go to
  // the lexicographically smallest size vector.
  std::vector<std::array<std::size_t, 6>> candidates;
  for_each_combination(6, extra, [&](std::span<const Vertex> up) {
    std::array<std::size_t, 6> s;
    s.fill(base);
    for (Vertex i : up) ++s[i];
    candidates.push_back(s);
  });
  std::sort(candidates.begin(), candidates.end());
  for (const auto& s : candidates) {
    std::uint64_t edges = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t prod = 1;
      for (Vertex v : g.edge(i)) prod *= s[v];
      edges += prod;
    }
    if (!found || edges > best_edges) {
      best = s;
      best_edges = edges;
      found = true;
    }
  }
  return best;
}

Hypergraph g62_balanced(std::size_t n) {
  const auto sizes = g62_balanced_sizes(n);
  return g62_blowup(sizes);
}

Hypergraph m1_pattern() {
  std::vector<Edge> edges;
  for (auto& e : all_r_subsets(5, 3))
    if (e != Edge{2, 3, 4}) edges.push_back(e);
  return Hypergraph(5, 3, std::move(edges));
}

Hypergraph random_hypergraph(std::size_t n, std::size_t r, double edge_probability, std::uint64_t seed) {
  require(edge_probability >= 0.0 && edge_probability <= 1.0, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](std::span<const Vertex> c) {
    const double u = coin(rng);
    if (edge_probability >= 1.0 || u < edge_probability) edges.emplace_back(c.begin(), c.end());
  });
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace hyturan
