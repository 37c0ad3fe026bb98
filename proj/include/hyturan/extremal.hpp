#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyturan/detect.hpp"
#include "hyturan/hypergraph.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan {

/// Exhaustive enumeration is limited to C(n,r) <= 24 slots, or 35 with
/// `extended_capacity`.
inline constexpr std::size_t kRawSlotCapacity = 24;
inline constexpr std::size_t kExtendedSlotCapacity = 35;

struct EnumerateOptions {
  std::size_t threads = 1;
  bool extended_capacity = false;
  DetectLimits limits;
};

/// Called once per isomorphism class with its canonical representative and
/// whether it is edge-maximal among pattern-free graphs.
using FreeVisitor = std::function<void(const Hypergraph& graph, bool maximal)>;

/// Visits every pattern-free r-graph on n vertices exactly once up to
/// isomorphism, level by level in edge count, each level in canonical order.
/// Children of a class are its one-edge extensions; pattern containment is
/// monotone, so extensions of a containing graph are never generated.
/// Without a pattern all r-graphs are visited. Returns the visit count.
std::uint64_t enumerate_free(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                             const FreeVisitor& visit, const EnumerateOptions& options = {});

enum class Objective { edges, lambda };
enum class SearchMode { exhaustive, hill_climb };

struct SearchWitness {
  Hypergraph graph;
  double value = 0.0;
  /// Solver status for the lambda objective; converged for edge counts.
  SolverStatus status = SolverStatus::converged;
  bool verified_free = false;
};

/// Reference value of the balanced complete k-partite graph, k = t - 1 for
/// the clique and fan families and their explicit members.
struct TuranComparison {
  std::size_t k = 0;
  double value = 0.0;
  bool among_witnesses = false;
};

struct HillClimbStep {
  std::size_t evaluation = 0;
  std::string move;
  double lambda = 0.0;
  std::size_t edges = 0;
};

struct SearchRecord {
  std::size_t n = 0;
  std::size_t r = 0;
  std::string pattern;
  Objective objective = Objective::edges;
  double p = 0.0;
  double best_value = 0.0;
  std::vector<SearchWitness> witnesses;
  std::uint64_t explored = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::optional<TuranComparison> turan;
  std::vector<HillClimbStep> trace;
};

/// ex(n, F) over the enumerated class, with every maximizing class.
SearchRecord ex_search(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                       const EnumerateOptions& options = {});

/// spex_p(n, F). Only edge-maximal free graphs are solved: adding an edge
/// never decreases lambda, so the maximum is attained on one of them.
/// Witnesses are the maximal classes within 1e-8 (relative) of the best.
SearchRecord spex_search(std::size_t n, std::size_t r, const std::optional<Pattern>& pattern,
                         const SolverConfig& config, const EnumerateOptions& options = {});

/// Edges of E_z that the transfer skips.
using EdgePredicate = std::function<bool(std::span<const Vertex>)>;

/// Deletes every edge containing u, then adds (e \ {z}) + {u} for each
/// remaining edge e containing z that is not excluded.
Hypergraph symmetrize(const Hypergraph& h, Vertex u, Vertex z, const EdgePredicate& excluded = {});

struct HillClimbOptions {
  std::size_t budget = 500;  // solver evaluations
  std::uint64_t seed = 0;
  SolverConfig solver;
  DetectLimits limits;
};

/// Local search from h0 over {add edge, remove edge, symmetrize u -> z with z
/// the heaviest vertex}, keeping pattern-freeness. A move is accepted when it
/// raises lambda by more than tol, or keeps lambda within tol while adding
/// edges. Stops at a local optimum or when the budget is spent.
SearchRecord hill_climb(const Hypergraph& h0, const std::optional<Pattern>& pattern,
                        const HillClimbOptions& options);

struct StabilityReport {
  std::size_t k = 0;
  double epsilon = 0.0;
  Partition best_partition;
  bool exact = false;
  std::uint64_t score = 0;
  std::size_t missing = 0;
  std::size_t bad = 0;
  std::uint64_t codegree_threshold = 0;
  double threshold_l = 0.0;
  double threshold_m = 0.0;
  std::vector<std::pair<Vertex, Vertex>> sparse_pairs;
  std::vector<Vertex> heavy_sparse_vertices;
  std::vector<Vertex> heavy_missing_vertices;
  std::size_t edit_distance_to_turan = 0;
};

struct StabilityOptions {
  /// Exact search over all assignments up to this many (k^n).
  std::uint64_t exact_limit = 1'000'000;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
};

/// d = [k + 1 + (r-2) C(k+1,2)] C(n, r-3) (zero for r = 2).
std::uint64_t codegree_threshold(std::size_t n, std::size_t k, std::size_t r);

/// Partition maximizing the score (lexicographically smallest normalized
/// assignment among maximizers) and the diagnostics for it. A cross pair is
/// sparse when its codegree is at most d and below its codegree in the
/// complete k-partite graph on the partition.
StabilityReport stability_report(const Hypergraph& h, std::size_t k, double epsilon,
                                 const StabilityOptions& options = {});

struct KPartiteCheck {
  bool holds = false;
  double lambda = 0.0;
  double lambda_turan = 0.0;
  bool isomorphic_to_turan = false;
  /// lambda < lambda_turan - 3 tol.
  bool strict = false;
};

/// Compares lambda(H) with lambda(T_r(n,k)) for H k-partite under sigma.
KPartiteCheck lambda_vs_kpartite_check(const Hypergraph& h, const Partition& sigma, const SolverConfig& config);

std::string_view objective_name(Objective o);
std::string_view mode_name(SearchMode m);

}  // namespace hyturan
