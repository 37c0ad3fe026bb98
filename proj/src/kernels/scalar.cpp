#include "kernels_impl.hpp"

namespace hyturan::kernels::detail {

void edge_products_scalar(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                          double* out) {
  for (std::size_t j = 0; j < m; ++j) {
    double p = x[cols[j]];
    for (std::size_t k = 1; k < r; ++k) p *= x[cols[k * m + j]];
    out[j] = p;
  }
}

void accumulate_partials_scalar(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                                double* grad) {
  double suffix[kMaxVectorUniformity + 1];
  for (std::size_t j = 0; j < m; ++j) {
    if (r > kMaxVectorUniformity) {
      // Direct leave-one-out products; only reached for very wide edges.
      for (std::size_t k = 0; k < r; ++k) {
        double p = 1.0;
        for (std::size_t q = 0; q < r; ++q)
          if (q != k) p *= x[cols[q * m + j]];
        grad[cols[k * m + j]] += p;
      }
      continue;
    }
    suffix[r] = 1.0;
    for (std::size_t k = r; k-- > 0;) suffix[k] = x[cols[k * m + j]] * suffix[k + 1];
    double prefix = 1.0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::int32_t v = cols[k * m + j];
      grad[v] += prefix * suffix[k + 1];
      prefix = prefix * x[v];
    }
  }
}

}  // namespace hyturan::kernels::detail
