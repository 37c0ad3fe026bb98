#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyturan/errors.hpp"

namespace hyturan {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// An r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored canonically: each edge is a strictly increasing tuple and
/// the edge list is sorted lexicographically, so two hypergraphs with the same
/// labeled edge set compare equal regardless of how they were built. Storage
/// is a flat row-major array of m*r labels.
class Hypergraph {
 public:
  /// Validates and canonicalizes. Throws ValidationError naming the offending
  /// edge (wrong size, repeated vertex, vertex out of range, duplicate edge).
  Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges);

  /// Edgeless r-graph on n vertices.
  Hypergraph(std::size_t n, std::size_t r);

  std::size_t order() const { return n_; }
  std::size_t uniformity() const { return r_; }
  std::size_t size() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, r_};
  }
  /// Row-major m*r label array, edges in canonical order.
  std::span<const Vertex> flat() const { return flat_; }
  std::vector<Edge> edges() const;

  /// `e` must be sorted ascending.
  bool contains_edge(std::span<const Vertex> e) const;
  /// Position of sorted edge `e` in canonical order, or size() when absent.
  std::size_t find_edge(std::span<const Vertex> e) const;

  Hypergraph with_edge(Edge e) const;
  Hypergraph without_edge(std::span<const Vertex> e) const;
  /// New label of vertex v is perm[v]; perm must be a permutation of 0..n-1.
  Hypergraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
  }

 private:
  struct Trusted {};
  Hypergraph(Trusted, std::size_t n, std::size_t r, std::vector<Vertex> flat)
      : n_(n), r_(r), flat_(std::move(flat)) {}

  std::size_t n_;
  std::size_t r_;
  std::vector<Vertex> flat_;
};

/// Assignment of every host vertex to one of k classes (classes may be empty).
struct Partition {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;

  Partition() = default;
  Partition(std::size_t classes, std::vector<std::size_t> assign);

  std::size_t vertex_count() const { return assignment.size(); }
  std::vector<std::vector<Vertex>> classes() const;
  /// Relabels classes in order of first appearance (restricted growth form).
  Partition normalized() const;
};

/// Labeled symmetric difference between two r-graphs on the same vertex set.
struct EditDelta {
  std::vector<Edge> added;    // in target, not in source
  std::vector<Edge> removed;  // in source, not in target
  std::size_t total() const { return added.size() + removed.size(); }
};

std::size_t degree(const Hypergraph& h, Vertex v);
std::size_t codegree(const Hypergraph& h, Vertex u, Vertex v);
/// {e \ {v} : v in e}, each (r-1)-set sorted, in canonical order.
std::vector<Edge> link(const Hypergraph& h, Vertex v);
std::vector<std::size_t> degrees(const Hypergraph& h);
/// Dense n*n codegree table (diagonal holds degrees).
std::vector<std::size_t> codegree_matrix(const Hypergraph& h);

bool is_strong_independent(const Hypergraph& h, std::span<const Vertex> set);
bool is_k_partite(const Hypergraph& h, const Partition& sigma);

/// Exact transversal number by branch and bound. Throws CapacityError when
/// n exceeds `max_vertices` (at most 64).
std::size_t transversal_number(const Hypergraph& h, std::size_t max_vertices = 64);

/// Replaces vertex v by a class of sizes[v] vertices (labels assigned
/// block-wise in vertex order) and each edge by the complete r-partite
/// r-graph on its classes. A zero size deletes the class.
Hypergraph blow_up(const Hypergraph& h, std::span<const std::size_t> sizes);

/// Sum over edges of the number of classes the edge meets.
std::uint64_t partition_score(const Hypergraph& h, const Partition& sigma);

/// Edges to add and remove to turn `from` into `to`.
EditDelta edit_delta(const Hypergraph& from, const Hypergraph& to);

/// Sub-hypergraph induced on `vertices`, relabeled 0..|vertices|-1 in the
/// given order.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> vertices);

/// sum |A_i| - (k-1)|union A_i|, a lower bound on |intersection A_i|.
long long intersection_lower_bound(std::span<const std::size_t> set_sizes,
                                   std::size_t union_size);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Calls f(combination) for every k-subset of 0..n-1 in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    f(std::span<const Vertex>(c));
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace hyturan
