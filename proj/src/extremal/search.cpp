#include <algorithm>
#include <cmath>
#include <random>

#include "hyturan/construct.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/isomorphism.hpp"

namespace hyturan {

std::string_view objective_name(Objective o) { return o == Objective::edges ? "edges" : "lambda"; }
std::string_view mode_name(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "hill-climb"; }

namespace {

std::string pattern_label(const std::optional<Pattern>& pattern) {
  return pattern ? pattern->describe() : std::string("none");
}

// k = t - 1 for the patterns whose extremal graph is T_r(n, t-1).
std::optional<std::size_t> turan_parts(const std::optional<Pattern>& pattern, std::size_t n, std::size_t r) {
  if (!pattern) return std::nullopt;
  switch (pattern->kind) {
    case PatternKind::clique_family:
    case PatternKind::fan_family:
    case PatternKind::expanded_clique:
    case PatternKind::generalized_fan:
      break;
    default:
      return std::nullopt;
  }
  const std::size_t k = pattern->t - 1;
  if (k < r || n < k) return std::nullopt;
  return k;
}

bool verify_free(const Hypergraph& g, const std::optional<Pattern>& pattern, const DetectLimits& limits) {
  return !pattern || contains(g, *pattern, limits).status == SearchStatus::absent;
}

bool any_isomorphic(const std::vector<SearchWitness>& ws, const Hypergraph& g) {
  return std::any_of(ws.begin(), ws.end(), [&](const SearchWitness& w) { return is_isomorphic(w.graph, g); });
}

}  // namespace

SearchRecord ex_search(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                       const EnumerateOptions& options) {
  SearchRecord rec;
  rec.n = n;
  rec.r = r;
  rec.pattern = pattern_label(pattern);
  rec.objective = Objective::edges;
  std::vector<Hypergraph> best;
  std::size_t top = 0;
  rec.explored = enumerate_free(
      n, r, pattern,
      [&](const Hypergraph& g, bool) {
        if (g.size() > top || best.empty()) {
          top = g.size();
          best.clear();
        }
        if (g.size() == top) best.push_back(g);
      },
      options);
  rec.best_value = static_cast<double>(top);
  for (auto& g : best) {
    SearchWitness w{std::move(g), static_cast<double>(top), SolverStatus::converged, false};
    w.verified_free = verify_free(w.graph, pattern, options.limits);
    rec.witnesses.push_back(std::move(w));
  }
  if (auto k = turan_parts(pattern, n, r)) {
    TuranComparison cmp;
    cmp.k = *k;
    cmp.value = static_cast<double>(turan_count(n, *k, r));
    cmp.among_witnesses = any_isomorphic(rec.witnesses, turan_hypergraph(n, *k, r));
    rec.turan = cmp;
  }
  return rec;
}

SearchRecord spex_search(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                         const SolverConfig& config, const EnumerateOptions& options) {
  SearchRecord rec;
  rec.n = n;
  rec.r = r;
  rec.pattern = pattern_label(pattern);
  rec.objective = Objective::lambda;
  rec.p = config.p;
  std::vector<Hypergraph> maximal;
  rec.explored = enumerate_free(
      n, r, pattern, [&](const Hypergraph& g, bool is_maximal) {
        if (is_maximal) maximal.push_back(g);
      },
      options);
  std::vector<SolverResult> results(maximal.size());
  for (std::size_t i = 0; i < maximal.size(); ++i) results[i] = p_spectral_radius(maximal[i], config);
  double top = 0.0;
  for (const auto& res : results) top = std::max(top, res.lambda);
  rec.best_value = top;
  const double tie = 1e-8 * std::max(1.0, top);
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (results[i].lambda < top - tie) continue;
    SearchWitness w{maximal[i], results[i].lambda, results[i].status, false};
    w.verified_free = verify_free(w.graph, pattern, options.limits);
    rec.witnesses.push_back(std::move(w));
  }
  if (auto k = turan_parts(pattern, n, r)) {
    const Hypergraph t = turan_hypergraph(n, *k, r);
    TuranComparison cmp;
    cmp.k = *k;
    cmp.value = p_spectral_radius(t, config).lambda;
    cmp.among_witnesses = any_isomorphic(rec.witnesses, t);
    rec.turan = cmp;
  }
  return rec;
}

Hypergraph symmetrize(const Hypergraph& h, Vertex u, Vertex z, const EdgePredicate& excluded) {
  if (u == z) throw ValidationError("symmetrize needs distinct vertices");
  if (u >= h.order() || z >= h.order()) throw IndexError("vertex out of range");
  std::vector<Edge> out;
  std::vector<Edge> moved;
  for (std::size_t j = 0; j < h.size(); ++j) {
    auto e = h.edge(j);
    if (std::find(e.begin(), e.end(), u) != e.end()) continue;
    out.emplace_back(e.begin(), e.end());
    if (std::find(e.begin(), e.end(), z) == e.end()) continue;
    if (excluded && excluded(e)) continue;
    Edge image(e.begin(), e.end());
    std::replace(image.begin(), image.end(), z, u);
    moved.push_back(std::move(image));
  }
  out.insert(out.end(), moved.begin(), moved.end());
  return Hypergraph(h.order(), h.uniformity(), std::move(out));
}

namespace {

std::string edge_text(std::span<const Vertex> e) {
  std::string s;
  for (Vertex v : e) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

struct Move {
  enum Kind { add, remove, symmetrize } kind;
  Edge edge;
  Vertex u = 0, z = 0;
};

}  // namespace

SearchRecord hill_climb(const Hypergraph& h0, const std::optional<Pattern>& pattern,
                        const HillClimbOptions& options) {
  if (pattern && contains(h0, *pattern, options.limits).status != SearchStatus::absent)
    throw ValidationError("hill_climb start graph is not pattern-free");
  const std::size_t n = h0.order(), r = h0.uniformity();
  const double tol = options.solver.tol;
  std::vector<Edge> slots;
  if (binomial(n, r) <= 200000)
    for_each_combination(n, r, [&](std::span<const Vertex> c) { slots.emplace_back(c.begin(), c.end()); });

  SearchRecord rec;
  rec.n = n;
  rec.r = r;
  rec.pattern = pattern_label(pattern);
  rec.objective = Objective::lambda;
  rec.p = options.solver.p;
  rec.mode = SearchMode::hill_climb;

  Hypergraph g = h0;
  SolverResult cur = p_spectral_radius(g, options.solver);
  std::size_t evals = 1;
  rec.trace.push_back({evals, "start", cur.lambda, g.size()});
  std::mt19937_64 rng(options.seed);

  while (evals < options.budget) {
    std::vector<Move> moves;
    for (const Edge& e : slots)
      if (!g.contains_edge(e)) moves.push_back({Move::add, e});
    for (std::size_t j = 0; j < g.size(); ++j) moves.push_back({Move::remove, Edge(g.edge(j).begin(), g.edge(j).end())});
    const auto& x = cur.vector.values;
    if (!x.empty()) {
      const Vertex z = static_cast<Vertex>(std::max_element(x.begin(), x.end()) - x.begin());
      for (Vertex u = 0; u < n; ++u)
        if (u != z) moves.push_back({Move::symmetrize, {}, u, z});
    }
    std::shuffle(moves.begin(), moves.end(), rng);

    bool improved = false;
    for (const Move& mv : moves) {
      if (evals >= options.budget) break;
      std::string label;
      Hypergraph cand = g;
      switch (mv.kind) {
        case Move::add:
          cand = g.with_edge(mv.edge);
          label = "add " + edge_text(mv.edge);
          break;
        case Move::remove:
          cand = g.without_edge(mv.edge);
          label = "remove " + edge_text(mv.edge);
          break;
        case Move::symmetrize:
          cand = symmetrize(g, mv.u, mv.z);
          label = "symmetrize " + std::to_string(mv.u) + "->" + std::to_string(mv.z);
          break;
      }
      if (cand == g) continue;
      if (mv.kind != Move::remove && pattern &&
          contains(cand, *pattern, options.limits).status != SearchStatus::absent)
        continue;
      SolverResult res = p_spectral_radius(cand, options.solver);
      ++evals;
      const bool better = res.lambda > cur.lambda + tol ||
                          (res.lambda >= cur.lambda - tol && cand.size() > g.size());
      if (!better) continue;
      g = std::move(cand);
      cur = std::move(res);
      rec.trace.push_back({evals, label, cur.lambda, g.size()});
      improved = true;
      break;
    }
    if (!improved) break;
  }
  rec.explored = evals;
  rec.best_value = cur.lambda;
  Hypergraph out = n <= kCanonicalMaxOrder ? canonical_form(g).graph : g;
  rec.witnesses.push_back({std::move(out), cur.lambda, cur.status, true});
  return rec;
}

KPartiteCheck lambda_vs_kpartite_check(const Hypergraph& h, const Partition& sigma, const SolverConfig& config) {
  if (sigma.vertex_count() != h.order()) throw ValidationError("partition does not cover the vertex set");
  if (!is_k_partite(h, sigma)) throw ValidationError("hypergraph is not k-partite under the given partition");
  const std::size_t n = h.order(), k = sigma.k, r = h.uniformity();
  KPartiteCheck out;
  out.lambda = p_spectral_radius(h, config).lambda;
  out.lambda_turan = p_spectral_radius(turan_hypergraph(n, k, r), config).lambda;
  // Among k-partite r-graphs only T_r(n,k) has t_r(n,k) edges.
  out.isomorphic_to_turan = h.size() == turan_count(n, k, r);
  out.holds = out.lambda <= out.lambda_turan + 3.0 * config.tol;
  out.strict = out.lambda < out.lambda_turan - 3.0 * config.tol;
  return out;
}

}  // namespace hyturan
