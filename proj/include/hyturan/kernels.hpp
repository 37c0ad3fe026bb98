#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan::kernels {

/// Edge list transposed to position-major order: column k holds the k-th
/// vertex of every edge, so SIMD lanes can gather four edges at once.
class EdgeTable {
 public:
  EdgeTable() = default;
  explicit EdgeTable(const Hypergraph& h);

  std::size_t uniformity() const { return r_; }
  std::size_t edge_count() const { return m_; }
  std::size_t vertex_count() const { return n_; }
  const std::int32_t* column(std::size_t k) const { return cols_.data() + k * m_; }

 private:
  std::size_t n_ = 0, r_ = 0, m_ = 0;
  std::vector<std::int32_t> cols_;
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
/// Backend used by the dispatching entry points. Defaults to the widest
/// available one; HYTURAN_SIMD=scalar in the environment forces scalar.
Backend active_backend();
void set_backend(Backend b);

/// out[j] = x[e_j[0]] * x[e_j[1]] * ... * x[e_j[r-1]], multiplied left to right.
void edge_products(const EdgeTable& t, std::span<const double> x, std::span<double> out);
void edge_products(Backend b, const EdgeTable& t, std::span<const double> x, std::span<double> out);

/// grad[v] += product of x over e \ {v}, for every edge e and v in e.
/// Leave-one-out products are prefix * suffix (no division); accumulation
/// order is edge-major then position, identical across backends.
void accumulate_partials(const EdgeTable& t, std::span<const double> x, std::span<double> grad);
void accumulate_partials(Backend b, const EdgeTable& t, std::span<const double> x, std::span<double> grad);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace hyturan::kernels
