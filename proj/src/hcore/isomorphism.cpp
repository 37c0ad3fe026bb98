#include "hyturan/isomorphism.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace hyturan {
namespace {

using Coloring = std::vector<std::size_t>;

std::size_t count_colors(const Coloring& c) {
  if (c.empty()) return 0;
  return *std::max_element(c.begin(), c.end()) + 1;
}

// Replaces arbitrary comparable keys by their dense rank.
template <class Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return out;
}

class Refiner {
 public:
  explicit Refiner(const Hypergraph& h) : h_(h), incident_(h.order()) {
    for (std::size_t i = 0; i < h.size(); ++i)
      for (Vertex v : h.edge(i)) incident_[v].push_back(i);
  }

  Coloring refine(Coloring colors) const {
    const std::size_t n = h_.order();
    std::size_t classes = count_colors(colors);
    using Signature = std::pair<std::size_t, std::vector<std::vector<std::size_t>>>;
    std::vector<Signature> sig(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].first = colors[v];
        auto& rows = sig[v].second;
        rows.clear();
        for (std::size_t i : incident_[v]) {
          std::vector<std::size_t> row;
          for (Vertex w : h_.edge(i))
            if (w != v) row.push_back(colors[w]);
          std::sort(row.begin(), row.end());
          rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end());
      }
      Coloring next = rank_keys(sig);
      std::size_t next_classes = count_colors(next);
      colors = std::move(next);
      if (next_classes == classes) return colors;
      classes = next_classes;
    }
  }

  // Transposition (u w) is an automorphism.
  bool twins(Vertex u, Vertex w) const {
    for (Vertex a : {u, w}) {
      Vertex b = a == u ? w : u;
      for (std::size_t i : incident_[a]) {
        auto e = h_.edge(i);
        if (std::find(e.begin(), e.end(), b) != e.end()) continue;
        Edge img(e.begin(), e.end());
        std::replace(img.begin(), img.end(), a, b);
        std::sort(img.begin(), img.end());
        if (!h_.contains_edge(img)) return false;
      }
    }
    return true;
  }

 private:
  const Hypergraph& h_;
  std::vector<std::vector<std::size_t>> incident_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Hypergraph& h) : h_(h), refiner_(h) {}

  CanonicalForm run() {
    search(Coloring(h_.order(), 0));
    return CanonicalForm{std::move(*best_), std::move(best_labeling_)};
  }

 private:
  void search(Coloring colors) {
    colors = refiner_.refine(std::move(colors));
    const std::size_t n = h_.order();
    std::vector<std::vector<Vertex>> cells(count_colors(colors));
    for (std::size_t v = 0; v < n; ++v) cells[colors[v]].push_back(static_cast<Vertex>(v));

    const std::vector<Vertex>* target = nullptr;
    for (const auto& cell : cells)
      if (cell.size() > 1 && (!target || cell.size() < target->size())) target = &cell;

    if (!target) {
      std::vector<Vertex> labeling(colors.begin(), colors.end());
      Hypergraph candidate = h_.relabeled(labeling);
      if (!best_ || std::lexicographical_compare(candidate.flat().begin(), candidate.flat().end(),
                                                 best_->flat().begin(), best_->flat().end())) {
        best_ = std::move(candidate);
        best_labeling_ = std::move(labeling);
      }
      return;
    }

    // One representative per twin class; twins lead to identical leaf sets.
    std::vector<Vertex> reps;
    for (Vertex v : *target) {
      bool covered = false;
      for (Vertex u : reps)
        if (refiner_.twins(u, v)) {
          covered = true;
          break;
        }
      if (!covered) reps.push_back(v);
    }
    for (Vertex v : reps) {
      Coloring next(n);
      for (std::size_t w = 0; w < n; ++w) next[w] = 2 * colors[w] + 1;
      next[v] = 2 * colors[v];
      search(rank_keys(next));
    }
  }

  const Hypergraph& h_;
  Refiner refiner_;
  std::optional<Hypergraph> best_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

std::vector<std::size_t> refined_coloring(const Hypergraph& h) {
  return Refiner(h).refine(Coloring(h.order(), 0));
}

CanonicalForm canonical_form(const Hypergraph& h, std::size_t max_order) {
  if (h.order() > max_order)
    throw CapacityError("canonical_form: n=" + std::to_string(h.order()) + " exceeds cap " +
                        std::to_string(max_order));
  return CanonicalSearch(h).run();
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t max_order) {
  if (a.order() != b.order() || a.uniformity() != b.uniformity() || a.size() != b.size()) return false;
  return canonical_form(a, max_order).graph == canonical_form(b, max_order).graph;
}

}  // namespace hyturan
