#include <algorithm>
#include <set>

#include "hyturan/extremal.hpp"
#include "hyturan/isomorphism.hpp"
#include "util/parallel.hpp"

namespace hyturan {
namespace {

using Flat = std::vector<Vertex>;

Flat canonical_flat(const Hypergraph& g) {
  const auto cf = canonical_form(g);
  return {cf.graph.flat().begin(), cf.graph.flat().end()};
}

Hypergraph from_flat(std::size_t n, std::size_t r, const Flat& flat) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < flat.size(); i += r) edges.emplace_back(flat.begin() + i, flat.begin() + i + r);
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace

std::uint64_t enumerate_free(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                             const FreeVisitor& visit, const EnumerateOptions& options) {
  if (r < 2) throw ValidationError("uniformity must be at least 2");
  const std::uint64_t slots = binomial(n, r);
  const std::size_t cap = options.extended_capacity ? kExtendedSlotCapacity : kRawSlotCapacity;
  if (slots > cap || n > kCanonicalMaxOrder)
    throw CapacityError("exhaustive enumeration needs C(n,r) <= " + std::to_string(cap) + ", got " +
                        std::to_string(slots));
  if (pattern && !pattern->monotone()) throw ValidationError("pattern must be closed under adding edges");

  auto is_free = [&](const Hypergraph& g) {
    if (!pattern) return true;
    const Witness w = contains(g, *pattern, options.limits);
    if (w.status == SearchStatus::budget_exceeded) throw CapacityError("node budget exceeded during enumeration");
    return !w.found();
  };

  std::vector<Edge> all;
  for_each_combination(n, r, [&](std::span<const Vertex> c) { all.emplace_back(c.begin(), c.end()); });

  std::uint64_t visited = 0;
  std::vector<Flat> level;
  if (is_free(Hypergraph(n, r))) level.push_back({});
  while (!level.empty()) {
    std::vector<std::vector<Flat>> children(level.size());
    detail::parallel_for(level.size(), options.threads, [&](std::size_t i) {
      const Hypergraph parent = from_flat(n, r, level[i]);
      std::set<Flat> seen;
      for (const Edge& e : all) {
        if (parent.contains_edge(e)) continue;
        const Hypergraph child = parent.with_edge(e);
        if (is_free(child)) seen.insert(canonical_flat(child));
      }
      children[i].assign(seen.begin(), seen.end());
    });
    std::set<Flat> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      visit(from_flat(n, r, level[i]), children[i].empty());
      ++visited;
      next.insert(children[i].begin(), children[i].end());
    }
    level.assign(next.begin(), next.end());
  }
  return visited;
}

}  // namespace hyturan
