#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "hyturan/kernels.hpp"
#include "kernels_impl.hpp"

namespace hyturan::kernels {
namespace {

Backend detect_default() {
  if (const char* env = std::getenv("HYTURAN_SIMD"); env && std::strcmp(env, "scalar") == 0)
    return Backend::scalar;
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> b{detect_default()};
  return b;
}

void check_sizes(const EdgeTable& t, std::size_t x_size) {
  if (x_size < t.vertex_count()) throw std::invalid_argument("weight vector shorter than vertex count");
}

}  // namespace

EdgeTable::EdgeTable(const Hypergraph& h)
    : n_(h.order()), r_(h.uniformity()), m_(h.size()), cols_(h.uniformity() * h.size()) {
  for (std::size_t j = 0; j < m_; ++j) {
    auto e = h.edge(j);
    for (std::size_t k = 0; k < r_; ++k) cols_[k * m_ + j] = static_cast<std::int32_t>(e[k]);
  }
}

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(HYTURAN_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) throw std::invalid_argument("SIMD backend not available on this machine");
  active().store(b, std::memory_order_relaxed);
}

void edge_products(Backend b, const EdgeTable& t, std::span<const double> x, std::span<double> out) {
  check_sizes(t, x.size());
  if (out.size() < t.edge_count()) throw std::invalid_argument("output shorter than edge count");
  if (t.edge_count() == 0) return;
#if defined(HYTURAN_HAVE_AVX2)
  if (b == Backend::avx2) {
    detail::edge_products_avx2(t.column(0), t.uniformity(), t.edge_count(), x.data(), out.data());
    return;
  }
#endif
  (void)b;
  detail::edge_products_scalar(t.column(0), t.uniformity(), t.edge_count(), x.data(), out.data());
}

void edge_products(const EdgeTable& t, std::span<const double> x, std::span<double> out) {
  edge_products(active_backend(), t, x, out);
}

void accumulate_partials(Backend b, const EdgeTable& t, std::span<const double> x, std::span<double> grad) {
  check_sizes(t, x.size());
  if (grad.size() < t.vertex_count()) throw std::invalid_argument("gradient shorter than vertex count");
  if (t.edge_count() == 0) return;
#if defined(HYTURAN_HAVE_AVX2)
  if (b == Backend::avx2) {
    detail::accumulate_partials_avx2(t.column(0), t.uniformity(), t.edge_count(), x.data(), grad.data());
    return;
  }
#endif
  (void)b;
  detail::accumulate_partials_scalar(t.column(0), t.uniformity(), t.edge_count(), x.data(), grad.data());
}

void accumulate_partials(const EdgeTable& t, std::span<const double> x, std::span<double> grad) {
  accumulate_partials(active_backend(), t, x, grad);
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace hyturan::kernels
