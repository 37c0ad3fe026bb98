#pragma once

// Raw-pointer kernel entry points. The AVX2 translation unit is compiled with
// -mavx2 and must not instantiate shared templates, so everything crossing
// the boundary is plain pointers and sizes.

#include <cstddef>
#include <cstdint>

namespace hyturan::kernels::detail {

// cols: r columns of m int32 vertex indices each.
void edge_products_scalar(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                          double* out);
void accumulate_partials_scalar(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                                double* grad);

#if defined(HYTURAN_HAVE_AVX2)
void edge_products_avx2(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x, double* out);
void accumulate_partials_avx2(const std::int32_t* cols, std::size_t r, std::size_t m, const double* x,
                              double* grad);
#endif

// Largest uniformity the vector kernels keep on the stack.
inline constexpr std::size_t kMaxVectorUniformity = 16;

}  // namespace hyturan::kernels::detail
