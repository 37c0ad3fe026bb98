#include <array>

#include "hyturan/construct.hpp"
#include "hyturan/detect.hpp"

namespace hyturan {
namespace {

constexpr std::array<std::pair<PatternKind, std::string_view>, 10> kNames{{
    {PatternKind::explicit_graph, "explicit"},
    {PatternKind::expanded_clique, "expanded-clique"},
    {PatternKind::generalized_fan, "fan"},
    {PatternKind::clique_family, "clique-family"},
    {PatternKind::fan_family, "fan-family"},
    {PatternKind::berge_clique, "berge"},
    {PatternKind::m1, "m1"},
    {PatternKind::semibipartite_colorable, "semibipartite"},
    {PatternKind::g62_colorable, "g62color"},
    {PatternKind::m_family, "m-family"},
}};

Pattern make(PatternKind kind, std::size_t t, std::size_t r) {
  Pattern p;
  p.kind = kind;
  p.t = t;
  p.r = r;
  return p;
}

void require_tr(std::size_t t, std::size_t r) {
  if (r < 2 || t < r) throw ValidationError("pattern needs t >= r >= 2");
}

}  // namespace

Pattern Pattern::explicit_graph(Hypergraph f) {
  Pattern p = make(PatternKind::explicit_graph, f.order(), f.uniformity());
  p.graph = std::move(f);
  return p;
}

Pattern Pattern::expanded_clique(std::size_t t, std::size_t r) {
  require_tr(t, r);
  Pattern p = make(PatternKind::expanded_clique, t, r);
  p.graph = hyturan::expanded_clique(t, r);
  return p;
}

Pattern Pattern::generalized_fan(std::size_t t, std::size_t r) {
  require_tr(t, r);
  Pattern p = make(PatternKind::generalized_fan, t, r);
  p.graph = hyturan::generalized_fan(t, r);
  return p;
}

Pattern Pattern::clique_family(std::size_t t, std::size_t r) {
  require_tr(t, r);
  return make(PatternKind::clique_family, t, r);
}

Pattern Pattern::fan_family(std::size_t t, std::size_t r) {
  require_tr(t, r);
  return make(PatternKind::fan_family, t, r);
}

Pattern Pattern::berge_clique(std::size_t t) {
  if (t < 2) throw ValidationError("Berge clique needs t >= 2");
  return make(PatternKind::berge_clique, t, 0);
}

Pattern Pattern::m1() {
  Pattern p = make(PatternKind::m1, 5, 3);
  p.graph = m1_pattern();
  return p;
}

Pattern Pattern::semibipartite_colorable() { return make(PatternKind::semibipartite_colorable, 0, 3); }
Pattern Pattern::g62_colorable() { return make(PatternKind::g62_colorable, 0, 3); }
Pattern Pattern::m_family() { return make(PatternKind::m_family, 0, 3); }

bool Pattern::monotone() const {
  return kind != PatternKind::semibipartite_colorable && kind != PatternKind::g62_colorable;
}

std::string Pattern::describe() const {
  std::string out(kind_name(kind));
  switch (kind) {
    case PatternKind::expanded_clique:
    case PatternKind::generalized_fan:
    case PatternKind::clique_family:
    case PatternKind::fan_family:
      out += "(t=" + std::to_string(t) + ",r=" + std::to_string(r) + ")";
      break;
    case PatternKind::berge_clique:
      out += "(t=" + std::to_string(t) + ")";
      break;
    case PatternKind::explicit_graph:
      out += "(n=" + std::to_string(graph->order()) + ",r=" + std::to_string(graph->uniformity()) +
             ",m=" + std::to_string(graph->size()) + ")";
      break;
    default:
      break;
  }
  return out;
}

std::string_view kind_name(PatternKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<PatternKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

Witness contains(const Hypergraph& h, const Pattern& pattern, const DetectLimits& limits) {
  auto same_r = [&] {
    if (pattern.r != h.uniformity()) throw ValidationError("pattern and host have different uniformity");
  };
  switch (pattern.kind) {
    case PatternKind::explicit_graph:
    case PatternKind::expanded_clique:
    case PatternKind::generalized_fan:
    case PatternKind::m1:
      return contains_subgraph(h, *pattern.graph, limits);
    case PatternKind::clique_family:
      same_r();
      return clique_family_core(h, pattern.t, limits);
    case PatternKind::fan_family:
      same_r();
      return fan_family_core(h, pattern.t, limits);
    case PatternKind::berge_clique:
      return contains_berge_clique(h, pattern.t, limits);
    case PatternKind::semibipartite_colorable:
      return is_semibipartite_colorable(h, limits);
    case PatternKind::g62_colorable:
      return is_g62_colorable(h, limits);
    case PatternKind::m_family:
      return contains_m_family(h, nullptr, limits);
  }
  return {};
}

}  // namespace hyturan
