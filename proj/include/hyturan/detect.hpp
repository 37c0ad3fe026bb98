#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

/// Largest host order accepted by the exact searches.
inline constexpr std::size_t kDetectMaxOrder = 64;

enum class SearchStatus { found, absent, budget_exceeded };
std::string_view status_name(SearchStatus s);

struct DetectLimits {
  /// Backtracking nodes allowed per query before giving up.
  std::uint64_t node_budget = 20'000'000;
};

/// Outcome of a containment query. The meaning of the payload depends on the
/// query:
///   embedding / homomorphism: vertices[i] = image of pattern vertex i;
///   family core / Berge clique: vertices = the core, ascending;
///   Berge clique: edges[q] = index (canonical order) of the host edge matched
///     to the q-th core pair in lexicographic order;
///   semibipartite coloring: vertices = the class A, ascending.
struct Witness {
  SearchStatus status = SearchStatus::absent;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Injective vertex map sending every edge of f to an edge of h.
Witness contains_subgraph(const Hypergraph& h, const Hypergraph& f, const DetectLimits& limits = {});

/// Edge-preserving (not necessarily injective) map from f into h.
Witness contains_hom(const Hypergraph& h, const Hypergraph& f, const DetectLimits& limits = {});

/// Lexicographically first t-set whose pairs are all covered by edges of h.
Witness clique_family_core(const Hypergraph& h, std::size_t t, const DetectLimits& limits = {});

/// As clique_family_core, additionally requiring an edge of h inside the core.
Witness fan_family_core(const Hypergraph& h, std::size_t t, const DetectLimits& limits = {});

/// Berge-K_t: a t-set and distinct edges covering its C(t,2) pairs.
Witness contains_berge_clique(const Hypergraph& h, std::size_t t, const DetectLimits& limits = {});

/// Partition V = A + B with |e & A| = 1 for every edge (3-graphs only).
Witness is_semibipartite_colorable(const Hypergraph& f, const DetectLimits& limits = {});

/// Homomorphism from f into G_6^2 (3-graphs only).
Witness is_g62_colorable(const Hypergraph& f, const DetectLimits& limits = {});

/// Copy of K_5^(3) minus an edge (3-graphs only).
Witness contains_m1(const Hypergraph& h, const DetectLimits& limits = {});

/// Best-effort membership test for the family M = M1 + M2 + M3 (3-graphs).
/// M1 is exact; M2 is decided exactly through 7-cores whose induced
/// subgraph has transversal number >= 2; M3 checks, for each 6-core, the
/// subgraph formed by the first covering edge of every core pair plus the
/// edges inside the core, reporting it when it is neither semibipartite nor
/// G_6^2-colorable. Sound, not complete for M3. `which` reports the
/// component (1, 2 or 3) of a positive answer.
Witness contains_m_family(const Hypergraph& h, int* which = nullptr, const DetectLimits& limits = {});

enum class PatternKind {
  explicit_graph,
  expanded_clique,
  generalized_fan,
  clique_family,
  fan_family,
  berge_clique,
  m1,
  semibipartite_colorable,
  g62_colorable,
  m_family,
};

/// A forbidden structure. `t` and `r` parameterize the generated and
/// family kinds; `graph` holds the explicit pattern.
struct Pattern {
  PatternKind kind = PatternKind::explicit_graph;
  std::size_t t = 0;
  std::size_t r = 3;
  std::optional<Hypergraph> graph;

  static Pattern explicit_graph(Hypergraph f);
  static Pattern expanded_clique(std::size_t t, std::size_t r);
  static Pattern generalized_fan(std::size_t t, std::size_t r);
  static Pattern clique_family(std::size_t t, std::size_t r);
  static Pattern fan_family(std::size_t t, std::size_t r);
  static Pattern berge_clique(std::size_t t);
  static Pattern m1();
  static Pattern semibipartite_colorable();
  static Pattern g62_colorable();
  static Pattern m_family();

  /// Containment is preserved under adding edges; required by the searches.
  bool monotone() const;
  /// Short description such as "clique-family(t=4,r=3)".
  std::string describe() const;
};

/// Kind name as used on the command line ("clique-family", "fan", ...).
std::string_view kind_name(PatternKind kind);
std::optional<PatternKind> parse_kind(std::string_view name);

/// Dispatches to the query matching the pattern kind. For the colorability
/// kinds "found" means the input is colorable.
Witness contains(const Hypergraph& h, const Pattern& pattern, const DetectLimits& limits = {});

}  // namespace hyturan
