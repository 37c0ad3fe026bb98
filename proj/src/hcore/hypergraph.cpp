#include "hyturan/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hyturan {
namespace {

std::string edge_string(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

bool edge_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorts edges of a flat array (each already sorted internally).
std::vector<Vertex> sort_flat(std::vector<Vertex> flat, std::size_t r) {
  const std::size_t m = r == 0 ? 0 : flat.size() / r;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return edge_less({flat.data() + a * r, r}, {flat.data() + b * r, r});
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t i : idx) out.insert(out.end(), flat.begin() + i * r, flat.begin() + (i + 1) * r);
  return out;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t r) : n_(n), r_(r) {
  if (r < 2) throw ValidationError("uniformity must be at least 2");
}

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges)
    : Hypergraph(n, r) {
  for (auto& e : edges) {
    if (e.size() != r) throw ValidationError("wrong edge size: " + edge_string(e));
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < r; ++i) {
      if (e[i] >= n) throw ValidationError("vertex out of range in edge " + edge_string(e));
      if (i > 0 && e[i] == e[i - 1])
        throw ValidationError("repeated vertex in edge " + edge_string(e));
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw ValidationError("duplicate edge " + edge_string(edges[i]));
  flat_.reserve(edges.size() * r);
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::size_t Hypergraph::find_edge(std::span<const Vertex> e) const {
  if (e.size() != r_) return size();
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (edge_less(edge(mid), e))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(e.begin(), e.end(), edge(lo).begin())) return lo;
  return size();
}

bool Hypergraph::contains_edge(std::span<const Vertex> e) const { return find_edge(e) != size(); }

Hypergraph Hypergraph::with_edge(Edge e) const {
  auto all = edges();
  all.push_back(std::move(e));
  return Hypergraph(n_, r_, std::move(all));
}

Hypergraph Hypergraph::without_edge(std::span<const Vertex> e) const {
  std::size_t pos = find_edge(e);
  if (pos == size()) throw ValidationError("edge not present");
  std::vector<Vertex> flat(flat_);
  flat.erase(flat.begin() + pos * r_, flat.begin() + (pos + 1) * r_);
  return Hypergraph(Trusted{}, n_, r_, std::move(flat));
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw ValidationError("permutation length must equal vertex count");
  std::vector<bool> seen(n_, false);
  for (Vertex v : perm) {
    if (v >= n_ || seen[v]) throw ValidationError("not a permutation");
    seen[v] = true;
  }
  std::vector<Vertex> flat(flat_.size());
  for (std::size_t i = 0; i < flat_.size(); ++i) flat[i] = perm[flat_[i]];
  for (std::size_t i = 0; i < size(); ++i) std::sort(flat.begin() + i * r_, flat.begin() + (i + 1) * r_);
  return Hypergraph(Trusted{}, n_, r_, sort_flat(std::move(flat), r_));
}

Partition::Partition(std::size_t classes, std::vector<std::size_t> assign)
    : k(classes), assignment(std::move(assign)) {
  for (std::size_t c : assignment)
    if (c >= k) throw ValidationError("partition class index out of range");
}

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(k);
  for (std::size_t v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(static_cast<Vertex>(v));
  return out;
}

Partition Partition::normalized() const {
  std::vector<std::size_t> remap(k, k);
  std::size_t next = 0;
  std::vector<std::size_t> a(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    auto& slot = remap[assignment[v]];
    if (slot == k) slot = next++;
    a[v] = slot;
  }
  return Partition(k, std::move(a));
}

}  // namespace hyturan
