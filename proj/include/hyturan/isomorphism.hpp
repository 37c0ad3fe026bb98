#pragma once

#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

inline constexpr std::size_t kCanonicalMaxOrder = 12;

/// Label-invariant canonical representative plus the relabeling that
/// produces it (labeling[v] = canonical label of v).
struct CanonicalForm {
  Hypergraph graph;
  std::vector<Vertex> labeling;
};

/// Exact canonical form by color refinement and individualization, with
/// twin-class pruning. Throws CapacityError when n > max_order.
CanonicalForm canonical_form(const Hypergraph& h, std::size_t max_order = kCanonicalMaxOrder);

/// True iff canonical forms coincide.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b,
                   std::size_t max_order = kCanonicalMaxOrder);

/// Stable label-invariant coloring (iterated degree/co-membership refinement).
std::vector<std::size_t> refined_coloring(const Hypergraph& h);

}  // namespace hyturan
