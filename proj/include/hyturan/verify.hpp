#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  /// Smaller instance counts and search sizes.
  bool quick = false;
  std::size_t threads = 1;
};

struct NamedGraph {
  std::string name;
  Hypergraph graph;
};

/// Outputs of every generator over a range of parameters.
std::vector<NamedGraph> generator_corpus();

/// Corpus graphs with n <= 6 plus seeded random 2-, 3- and 4-graphs on at
/// most 6 vertices.
std::vector<NamedGraph> small_corpus();

/// Largest eigenvalue of a dense symmetric n*n matrix by cyclic Jacobi
/// rotations.
double jacobi_largest_eigenvalue(std::vector<double> a, std::size_t n);

/// Spectral radius of the adjacency matrix of a 2-graph.
double adjacency_spectral_radius(const Hypergraph& g);

/// Berge-K_t by exhaustive search over t-sets and injective pair-to-edge
/// assignments.
bool brute_force_berge(const Hypergraph& h, std::size_t t);

/// Isomorphism classes of all r-graphs on n labeled vertices, deduplicated
/// by the minimum relabeled edge list over all n! permutations.
std::size_t brute_force_class_count(std::size_t n, std::size_t r);

inline constexpr int kCriterionCount = 9;

/// Runs acceptance criterion `id` (1..kCriterionCount).
CheckResult acceptance_criterion(int id, const Options& options);

/// Invariants and properties of every module.
std::vector<CheckResult> property_suites(const Options& options);

/// One line per result; returns the number of failures.
std::size_t print_results(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace hyturan::verify
