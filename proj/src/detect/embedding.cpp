#include <algorithm>
#include <bit>

#include "detect_internal.hpp"

namespace hyturan {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

namespace detail {

std::vector<Mask> covered_masks(const Hypergraph& h) {
  if (h.order() > kDetectMaxOrder) throw CapacityError("exact search limited to 64 vertices");
  std::vector<Mask> out(h.order(), 0);
  for (std::size_t j = 0; j < h.size(); ++j) {
    Mask m = 0;
    for (Vertex v : h.edge(j)) m |= bit(v);
    for (Vertex v : h.edge(j)) out[v] |= m & ~bit(v);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::bit;
using detail::Mask;

// Search order for the pattern vertices: most constrained first, i.e. the
// highest degree, then repeatedly the vertex sharing edges with the most
// already-placed vertices. Isolated vertices are handled separately.
struct Plan {
  std::vector<Vertex> order;
  // For each step: earlier pattern vertices sharing an edge with it.
  std::vector<std::vector<Vertex>> neighbors;
  // For each step: pattern edges whose last vertex is placed at this step.
  std::vector<std::vector<std::size_t>> closing;
  std::vector<Vertex> isolated;
};

Plan make_plan(const Hypergraph& f, const std::vector<std::size_t>& fcodeg) {
  const std::size_t n = f.order();
  Plan plan;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> link_to_placed(n, 0);
  std::size_t live = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (fcodeg[v * n + v] == 0)
      plan.isolated.push_back(static_cast<Vertex>(v));
    else
      ++live;
  }
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t step = 0; step < live; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || fcodeg[v * n + v] == 0) continue;
      if (pick == n || link_to_placed[v] > link_to_placed[pick] ||
          (link_to_placed[v] == link_to_placed[pick] && fcodeg[v * n + v] > fcodeg[pick * n + pick]))
        pick = v;
    }
    placed[pick] = 1;
    pos[pick] = step;
    std::vector<Vertex> nb;
    for (Vertex u : plan.order)
      if (fcodeg[u * n + pick] > 0) nb.push_back(u);
    plan.order.push_back(static_cast<Vertex>(pick));
    plan.neighbors.push_back(std::move(nb));
    for (std::size_t v = 0; v < n; ++v)
      if (v != pick && fcodeg[pick * n + v] > 0) ++link_to_placed[v];
  }
  plan.closing.resize(live);
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::size_t last = 0;
    for (Vertex v : f.edge(j)) last = std::max(last, pos[v]);
    plan.closing[last].push_back(j);
  }
  return plan;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Hypergraph& h, const Hypergraph& f, bool injective, std::uint64_t budget)
      : h_(h),
        f_(f),
        injective_(injective),
        cov_(detail::covered_masks(h)),
        hcodeg_(codegree_matrix(h)),
        fcodeg_(codegree_matrix(f)),
        plan_(make_plan(f, fcodeg_)),
        map_(f.order(), 0),
        budget_(budget) {}

  Witness run() {
    Witness out;
    const bool ok = dfs(0);
    out.nodes = budget_.used();
    if (budget_.exhausted()) {
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
    if (!ok || !place_isolated()) return out;
    out.status = SearchStatus::found;
    out.vertices = map_;
    return out;
  }

 private:
  bool dfs(std::size_t step) {
    if (!budget_.tick()) return false;
    if (step == plan_.order.size()) return true;
    const std::size_t hn = h_.order(), fn = f_.order();
    const Vertex w = plan_.order[step];
    Mask cand = hn == 64 ? ~Mask{0} : bit(hn) - 1;
    if (injective_) cand &= ~used_;
    for (Vertex u : plan_.neighbors[step]) cand &= cov_[map_[u]];
    std::vector<Vertex> image(f_.uniformity());
    while (cand) {
      const Vertex c = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      if (injective_) {
        if (hcodeg_[c * hn + c] < fcodeg_[w * fn + w]) continue;
        bool ok = true;
        for (Vertex u : plan_.neighbors[step])
          if (hcodeg_[map_[u] * hn + c] < fcodeg_[u * fn + w]) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      map_[w] = c;
      bool edges_ok = true;
      for (std::size_t j : plan_.closing[step]) {
        auto e = f_.edge(j);
        for (std::size_t k = 0; k < e.size(); ++k) image[k] = map_[e[k]];
        std::sort(image.begin(), image.end());
        if (!h_.contains_edge(image)) {
          edges_ok = false;
          break;
        }
      }
      if (!edges_ok) continue;
      used_ |= bit(c);
      if (dfs(step + 1)) return true;
      used_ &= ~bit(c);
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  bool place_isolated() {
    if (plan_.isolated.empty()) return true;
    if (h_.order() == 0) return false;
    Vertex next = 0;
    for (Vertex v : plan_.isolated) {
      if (injective_) {
        while (next < h_.order() && (used_ & bit(next))) ++next;
        if (next == h_.order()) return false;
        used_ |= bit(next);
      }
      map_[v] = next;
    }
    return true;
  }

  const Hypergraph& h_;
  const Hypergraph& f_;
  bool injective_;
  std::vector<Mask> cov_;
  std::vector<std::size_t> hcodeg_;
  std::vector<std::size_t> fcodeg_;
  Plan plan_;
  std::vector<Vertex> map_;
  Mask used_ = 0;
  detail::Budget budget_;
};

void check_uniformity(const Hypergraph& h, const Hypergraph& f) {
  if (h.uniformity() != f.uniformity()) throw ValidationError("pattern and host have different uniformity");
}

}  // namespace

Witness contains_subgraph(const Hypergraph& h, const Hypergraph& f, const DetectLimits& limits) {
  check_uniformity(h, f);
  if (h.order() > kDetectMaxOrder) throw CapacityError("exact search limited to 64 vertices");
  if (f.order() > h.order() || f.size() > h.size()) return {};
  return EmbeddingSearch(h, f, true, limits.node_budget).run();
}

Witness contains_hom(const Hypergraph& h, const Hypergraph& f, const DetectLimits& limits) {
  check_uniformity(h, f);
  if (h.empty() && !f.empty()) return {};
  return EmbeddingSearch(h, f, false, limits.node_budget).run();
}

}  // namespace hyturan
