#include <algorithm>
#include <bit>
#include <functional>

#include "detect_internal.hpp"
#include "hyturan/construct.hpp"

namespace hyturan {
namespace {

using detail::bit;
using detail::Mask;

std::vector<Mask> edge_masks(const Hypergraph& h) {
  std::vector<Mask> out(h.size(), 0);
  for (std::size_t j = 0; j < h.size(); ++j)
    for (Vertex v : h.edge(j)) out[j] |= bit(v);
  return out;
}

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Visits the t-cliques of the covered-pair graph in lexicographic order
// until `visit` returns true. Returns the search status.
SearchStatus for_each_core(const std::vector<Mask>& cov, std::size_t t, detail::Budget& budget,
                           const std::function<bool(Mask)>& visit) {
  const std::size_t n = cov.size();
  if (t == 0 || t > n) return SearchStatus::absent;
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  bool stop = false;
  std::function<void(Mask, Mask, std::size_t)> grow = [&](Mask core, Mask cand, std::size_t size) {
    if (stop || !budget.tick()) return;
    if (size == t) {
      stop = visit(core);
      return;
    }
    while (cand && !stop && !budget.exhausted()) {
      if (static_cast<std::size_t>(std::popcount(cand)) < t - size) return;
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      // Later vertices only: cand already excludes everything <= v.
      grow(core | bit(v), cand & cov[v], size + 1);
    }
  };
  grow(0, all, 0);
  if (stop) return SearchStatus::found;
  return budget.exhausted() ? SearchStatus::budget_exceeded : SearchStatus::absent;
}

Witness core_search(const Hypergraph& h, std::size_t t, const DetectLimits& limits,
                    const std::function<bool(Mask)>& accept) {
  const auto cov = detail::covered_masks(h);
  detail::Budget budget(limits.node_budget);
  Mask hit = 0;
  Witness out;
  out.status = for_each_core(cov, t, budget, [&](Mask core) {
    if (!accept(core)) return false;
    hit = core;
    return true;
  });
  out.nodes = budget.used();
  if (out.found()) out.vertices = members(hit);
  return out;
}

// Kuhn's augmenting paths; match[q] = edge index for pair q.
bool perfect_matching(const std::vector<std::vector<std::size_t>>& options, std::size_t edge_count,
                      std::vector<std::size_t>& match) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(edge_count, none);
  match.assign(options.size(), none);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t q) {
    for (std::size_t e : options[q]) {
      if (seen[e]) continue;
      seen[e] = 1;
      if (owner[e] == none || augment(owner[e])) {
        owner[e] = q;
        match[q] = e;
        return true;
      }
    }
    return false;
  };
  for (std::size_t q = 0; q < options.size(); ++q) {
    seen.assign(edge_count, 0);
    if (!augment(q)) return false;
  }
  return true;
}

void require_three(const Hypergraph& h, const char* what) {
  if (h.uniformity() != 3) throw ValidationError(std::string(what) + " is defined for 3-graphs only");
}

}  // namespace

Witness clique_family_core(const Hypergraph& h, std::size_t t, const DetectLimits& limits) {
  return core_search(h, t, limits, [](Mask) { return true; });
}

Witness fan_family_core(const Hypergraph& h, std::size_t t, const DetectLimits& limits) {
  const auto em = edge_masks(h);
  return core_search(h, t, limits, [&](Mask core) {
    return std::any_of(em.begin(), em.end(), [&](Mask e) { return (e & ~core) == 0; });
  });
}

Witness contains_berge_clique(const Hypergraph& h, std::size_t t, const DetectLimits& limits) {
  if (t < 2) throw ValidationError("Berge clique needs t >= 2");
  if (h.size() < t * (t - 1) / 2) return {};
  const auto em = edge_masks(h);
  std::vector<std::size_t> match;
  Witness out = core_search(h, t, limits, [&](Mask core) {
    const auto verts = members(core);
    std::vector<std::vector<std::size_t>> options;
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        const Mask pair = bit(verts[a]) | bit(verts[b]);
        std::vector<std::size_t> opts;
        for (std::size_t j = 0; j < em.size(); ++j)
          if ((em[j] & pair) == pair) opts.push_back(j);
        options.push_back(std::move(opts));
      }
    return perfect_matching(options, em.size(), match);
  });
  if (out.found()) out.edges = match;
  return out;
}

Witness is_semibipartite_colorable(const Hypergraph& f, const DetectLimits& limits) {
  require_three(f, "semibipartite coloring");
  const std::size_t n = f.order();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < f.size(); ++j)
    for (Vertex v : f.edge(j)) incident[v].push_back(j);
  // side[v]: 1 = A, 0 = B, -1 = unassigned.
  std::vector<int> side(n, -1);
  detail::Budget budget(limits.node_budget);
  auto consistent = [&](std::size_t v) {
    for (std::size_t j : incident[v]) {
      int in_a = 0, assigned = 0;
      for (Vertex u : f.edge(j)) {
        if (side[u] < 0) continue;
        ++assigned;
        in_a += side[u];
      }
      if (in_a > 1 || (assigned == 3 && in_a != 1)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t v) {
    if (!budget.tick()) return false;
    if (v == n) return true;
    for (int s : {1, 0}) {
      side[v] = s;
      if (consistent(v) && assign(v + 1)) return true;
      if (budget.exhausted()) return false;
    }
    side[v] = -1;
    return false;
  };
  Witness out;
  const bool ok = assign(0);
  out.nodes = budget.used();
  if (budget.exhausted()) {
    out.status = SearchStatus::budget_exceeded;
  } else if (ok) {
    out.status = SearchStatus::found;
    for (std::size_t v = 0; v < n; ++v)
      if (side[v] == 1) out.vertices.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Witness is_g62_colorable(const Hypergraph& f, const DetectLimits& limits) {
  require_three(f, "G_6^2 coloring");
  return contains_hom(g62(), f, limits);
}

Witness contains_m1(const Hypergraph& h, const DetectLimits& limits) {
  require_three(h, "M1 detection");
  return contains_subgraph(h, m1_pattern(), limits);
}

Witness contains_m_family(const Hypergraph& h, int* which, const DetectLimits& limits) {
  require_three(h, "M detection");
  auto report = [&](Witness w, int component) {
    if (which) *which = w.found() ? component : 0;
    return w;
  };
  Witness m1 = contains_m1(h, limits);
  if (m1.status != SearchStatus::absent) return report(std::move(m1), 1);

  const auto em = edge_masks(h);
  Witness m2 = core_search(h, 7, limits, [&](Mask core) {
    std::vector<Edge> inside;
    const auto verts = members(core);
    for (std::size_t j = 0; j < em.size(); ++j)
      if ((em[j] & ~core) == 0) {
        Edge e;
        for (Vertex v : h.edge(j))
          e.push_back(static_cast<Vertex>(std::find(verts.begin(), verts.end(), v) - verts.begin()));
        inside.push_back(std::move(e));
      }
    return transversal_number(Hypergraph(7, 3, std::move(inside))) >= 2;
  });
  if (m2.status != SearchStatus::absent) return report(std::move(m2), 2);

  Witness m3 = core_search(h, 6, limits, [&](Mask core) {
    std::vector<char> take(em.size(), 0);
    const auto verts = members(core);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        const Mask pair = bit(verts[a]) | bit(verts[b]);
        for (std::size_t j = 0; j < em.size(); ++j)
          if ((em[j] & pair) == pair) {
            take[j] = 1;
            break;
          }
      }
    for (std::size_t j = 0; j < em.size(); ++j)
      if ((em[j] & ~core) == 0) take[j] = 1;
    std::vector<Edge> chosen;
    for (std::size_t j = 0; j < em.size(); ++j)
      if (take[j]) chosen.emplace_back(h.edge(j).begin(), h.edge(j).end());
    const Hypergraph f(h.order(), 3, std::move(chosen));
    return is_semibipartite_colorable(f, limits).status == SearchStatus::absent &&
           is_g62_colorable(f, limits).status == SearchStatus::absent;
  });
  return report(std::move(m3), m3.found() ? 3 : 0);
}

}  // namespace hyturan
