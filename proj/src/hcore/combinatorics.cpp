#include <algorithm>
#include <iterator>
#include <string>

#include "hyturan/hypergraph.hpp"

namespace hyturan {
namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.order())
    throw IndexError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(h.order()));
}

void check_cover(const Hypergraph& h, const Partition& sigma) {
  if (sigma.vertex_count() != h.order())
    throw ValidationError("partition does not cover the vertex set");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::size_t degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  return static_cast<std::size_t>(std::count(h.flat().begin(), h.flat().end(), v));
}

std::size_t codegree(const Hypergraph& h, Vertex u, Vertex v) {
  check_vertex(h, u);
  check_vertex(h, v);
  if (u == v) throw ValidationError("codegree requires distinct vertices");
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    if (std::find(e.begin(), e.end(), u) != e.end() && std::find(e.begin(), e.end(), v) != e.end())
      ++count;
  }
  return count;
}

std::vector<Edge> link(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    Edge rest;
    for (Vertex w : e)
      if (w != v) rest.push_back(w);
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.order(), 0);
  for (Vertex v : h.flat()) ++d[v];
  return d;
}

std::vector<std::size_t> codegree_matrix(const Hypergraph& h) {
  const std::size_t n = h.order(), r = h.uniformity();
  std::vector<std::size_t> c(n * n, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) ++c[e[a] * n + e[b]];
  }
  return c;
}

bool is_strong_independent(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<bool> in(h.order(), false);
  for (Vertex v : set) {
    check_vertex(h, v);
    in[v] = true;
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    int hits = 0;
    for (Vertex v : h.edge(i)) hits += in[v] ? 1 : 0;
    if (hits >= 2) return false;
  }
  return true;
}

bool is_k_partite(const Hypergraph& h, const Partition& sigma) {
  check_cover(h, sigma);
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < h.size(); ++i) {
    cls.clear();
    for (Vertex v : h.edge(i)) cls.push_back(sigma.assignment[v]);
    std::sort(cls.begin(), cls.end());
    if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) return false;
  }
  return true;
}

namespace {

struct TransversalSearch {
  std::size_t best;

  static std::size_t disjoint_packing(const std::vector<std::uint64_t>& edges) {
    std::uint64_t used = 0;
    std::size_t count = 0;
    for (auto e : edges)
      if ((e & used) == 0) {
        used |= e;
        ++count;
      }
    return count;
  }

  void run(const std::vector<std::uint64_t>& uncovered, std::size_t chosen) {
    if (uncovered.empty()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + disjoint_packing(uncovered) >= best) return;
    // Any transversal contains a vertex of the first uncovered edge.
    std::uint64_t pivot = uncovered.front();
    std::vector<std::uint64_t> rest;
    for (std::uint64_t bits = pivot; bits; bits &= bits - 1) {
      std::uint64_t v = bits & (~bits + 1);
      rest.clear();
      for (auto e : uncovered)
        if ((e & v) == 0) rest.push_back(e);
      run(rest, chosen + 1);
    }
  }
};

std::size_t greedy_transversal(std::vector<std::uint64_t> edges, std::size_t n) {
  std::size_t count = 0;
  while (!edges.empty()) {
    std::size_t best_v = 0, best_hits = 0;
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t hits = 0;
      for (auto e : edges) hits += (e >> v) & 1u;
      if (hits > best_hits) {
        best_hits = hits;
        best_v = v;
      }
    }
    std::erase_if(edges, [&](std::uint64_t e) { return (e >> best_v) & 1u; });
    ++count;
  }
  return count;
}

}  // namespace

std::size_t transversal_number(const Hypergraph& h, std::size_t max_vertices) {
  max_vertices = std::min<std::size_t>(max_vertices, 64);
  if (h.order() > max_vertices)
    throw CapacityError("transversal_number: n=" + std::to_string(h.order()) + " exceeds cap " +
                        std::to_string(max_vertices));
  std::vector<std::uint64_t> edges;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::uint64_t mask = 0;
    for (Vertex v : h.edge(i)) mask |= std::uint64_t{1} << v;
    edges.push_back(mask);
  }
  TransversalSearch search{greedy_transversal(edges, h.order())};
  search.run(edges, 0);
  return search.best;
}

Hypergraph blow_up(const Hypergraph& h, std::span<const std::size_t> sizes) {
  if (sizes.size() != h.order())
    throw ValidationError("blow_up: sizes length " + std::to_string(sizes.size()) +
                          " does not match n=" + std::to_string(h.order()));
  const std::size_t r = h.uniformity();
  std::vector<std::size_t> offset(h.order() + 1, 0);
  for (std::size_t v = 0; v < h.order(); ++v) offset[v + 1] = offset[v] + sizes[v];
  std::vector<Edge> out;
  std::vector<std::size_t> digit(r);
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    bool empty_class = false;
    for (Vertex v : e) empty_class |= sizes[v] == 0;
    if (empty_class) continue;
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      Edge img(r);
      for (std::size_t a = 0; a < r; ++a) img[a] = static_cast<Vertex>(offset[e[a]] + digit[a]);
      out.push_back(std::move(img));
      std::size_t a = r;
      while (a > 0 && ++digit[a - 1] == sizes[e[a - 1]]) digit[--a] = 0;
      if (a == 0) break;
    }
  }
  return Hypergraph(offset.back(), r, std::move(out));
}

std::uint64_t partition_score(const Hypergraph& h, const Partition& sigma) {
  check_cover(h, sigma);
  std::uint64_t score = 0;
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < h.size(); ++i) {
    cls.clear();
    for (Vertex v : h.edge(i)) cls.push_back(sigma.assignment[v]);
    std::sort(cls.begin(), cls.end());
    score += static_cast<std::uint64_t>(std::unique(cls.begin(), cls.end()) - cls.begin());
  }
  return score;
}

EditDelta edit_delta(const Hypergraph& from, const Hypergraph& to) {
  if (from.order() != to.order() || from.uniformity() != to.uniformity())
    throw ValidationError("edit_delta requires equal n and r");
  EditDelta d;
  auto a = from.edges(), b = to.edges();
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.added));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.removed));
  return d;
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> map(h.order(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(h, vertices[i]);
    map[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    Edge img;
    for (Vertex v : h.edge(i)) {
      if (map[v] == kAbsent) break;
      img.push_back(map[v]);
    }
    if (img.size() == h.uniformity()) out.push_back(std::move(img));
  }
  return Hypergraph(vertices.size(), h.uniformity(), std::move(out));
}

long long intersection_lower_bound(std::span<const std::size_t> set_sizes, std::size_t union_size) {
  long long sum = 0;
  for (std::size_t s : set_sizes) {
    if (s > union_size) throw ValidationError("set size exceeds union size");
    sum += static_cast<long long>(s);
  }
  if (set_sizes.empty()) throw ValidationError("intersection bound needs at least one set");
  return sum - static_cast<long long>(set_sizes.size() - 1) * static_cast<long long>(union_size);
}

}  // namespace hyturan
