#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

/// t_r(n,k) = sum over r-subsets S of [k] of prod_{i in S} floor((n+i-1)/k).
std::uint64_t turan_count(std::size_t n, std::size_t k, std::size_t r);

/// Part sizes floor((n+i-1)/k), i = 1..k (ascending).
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t k);

/// T_r(n,k): complete k-partite r-graph with balanced parts, parts on
/// consecutive labels in ascending size order. Requires n >= k >= r >= 2.
Hypergraph turan_hypergraph(std::size_t n, std::size_t k, std::size_t r);

/// Defining partition of turan_hypergraph(n, k, r).
Partition turan_partition(std::size_t n, std::size_t k);

/// K_t^(r).
Hypergraph complete_r_graph(std::size_t t, std::size_t r);

/// How the (r-2)-sets that enlarge the pairs of the core are allocated.
enum class Enlargement {
  disjoint,  // every pair gets its own fresh set
  shared,    // one fresh set reused by every pair
};

/// H_t^(r): core 0..t-1; pair q (lexicographic order) enlarged by labels
/// t + (r-2)q .. t + (r-2)(q+1) - 1 (disjoint mode) or by t .. t+r-3 (shared).
Hypergraph expanded_clique(std::size_t t, std::size_t r, Enlargement mode = Enlargement::disjoint);

/// F_t^(r): core 0..t-1, the edge {0..r-1}, and every core pair not inside
/// {0..r-1} enlarged by its own fresh (r-2)-set, in lexicographic pair order.
Hypergraph generalized_fan(std::size_t t, std::size_t r);

/// Complete k-partite r-graph with parts of the given sizes on consecutive
/// labels. Requires k >= r and all sizes >= 1.
Hypergraph complete_k_partite(std::span<const std::size_t> sizes, std::size_t r);

/// Partition matching complete_k_partite(sizes, r).
Partition block_partition(std::span<const std::size_t> sizes);

/// G_n^1: A = first floor(n/3) labels, every triple with exactly one vertex in A.
Hypergraph semibipartite_max(std::size_t n);

/// G_6^2: the 3-graph on 6 vertices whose complement is
/// {012, 015, 234, 345} (0-based labels).
Hypergraph g62();

/// blow_up(g62(), part_sizes); all sizes >= 1.
Hypergraph g62_blowup(std::span<const std::size_t> part_sizes);

/// Part sizes floor(n/6) or ceil(n/6) maximizing the blow-up edge count
/// (lexicographically smallest among maximizers).
std::array<std::size_t, 6> g62_balanced_sizes(std::size_t n);

/// G_n^2 = g62_blowup(g62_balanced_sizes(n)); n >= 6.
Hypergraph g62_balanced(std::size_t n);

/// K_5^(3) minus the edge {2,3,4}.
Hypergraph m1_pattern();

/// Each r-subset included independently with the given probability,
/// deterministic in `seed`.
Hypergraph random_hypergraph(std::size_t n, std::size_t r, double edge_probability, std::uint64_t seed);

}  // namespace hyturan
