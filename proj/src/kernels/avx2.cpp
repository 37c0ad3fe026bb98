#include "kernels_impl.hpp"

#if defined(HYTURAN_HAVE_AVX2)
#include <immintrin.h>

namespace hyturan::kernels::detail {
namespace {

inline __m256d gather4(const double* x, const std::int32_t* idx) {
  const __m128i i = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
  return _mm256_i32gather_pd(x, i, 8);
}

}  // namespace

void edge_products_avx2(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x, double* out) {
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    __m256d p = gather4(x, cols + j);
    for (std::size_t k = 1; k < r; ++k) p = _mm256_mul_pd(p, gather4(x, cols + k * m + j));
    _mm256_storeu_pd(out + j, p);
  }
  for (; j < m; ++j) {
    double p = x[cols[j]];
    for (std::size_t k = 1; k < r; ++k) p *= x[cols[k * m + j]];
    out[j] = p;
  }
}

void accumulate_partials_avx2(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                              double* grad) {
  if (r > kMaxVectorUniformity) {
    accumulate_partials_scalar(cols, r, m, x, grad);
    return;
  }
  alignas(32) double partial[kMaxVectorUniformity][4];
  __m256d xs[kMaxVectorUniformity];
  __m256d suffix[kMaxVectorUniformity + 1];
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    for (std::size_t k = 0; k < r; ++k) xs[k] = gather4(x, cols + k * m + j);
    suffix[r] = one;
    for (std::size_t k = r; k-- > 0;) suffix[k] = _mm256_mul_pd(xs[k], suffix[k + 1]);
    __m256d prefix = one;
    for (std::size_t k = 0; k < r; ++k) {
      _mm256_store_pd(partial[k], _mm256_mul_pd(prefix, suffix[k + 1]));
      prefix = _mm256_mul_pd(prefix, xs[k]);
    }
    // Scatter in the scalar kernel's order: edge by edge, position by position.
    for (std::size_t lane = 0; lane < 4; ++lane)
      for (std::size_t k = 0; k < r; ++k) grad[cols[k * m + j + lane]] += partial[k][lane];
  }
  if (j < m) {
    // Tail edges, same arithmetic as the scalar kernel.
    double suffix_s[kMaxVectorUniformity + 1];
    for (; j < m; ++j) {
      suffix_s[r] = 1.0;
      for (std::size_t k = r; k-- > 0;) suffix_s[k] = x[cols[k * m + j]] * suffix_s[k + 1];
      double pre = 1.0;
      for (std::size_t k = 0; k < r; ++k) {
        const std::int32_t v = cols[k * m + j];
        grad[v] += pre * suffix_s[k + 1];
        pre = pre * x[v];
      }
    }
  }
}

}  // namespace hyturan::kernels::detail
#endif
