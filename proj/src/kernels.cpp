#include "arith/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arith::kernels {

namespace {

// Accumulates into out[lo..hi] (1-based, inclusive) every product a[d]*b[m/d]
// with m in range, d ascending. Zero factors are skipped identically by all
// callers so skipping never changes a result between kernels.
template <Coefficient T>
void convolve_block(std::span<const T> a, std::span<const T> b, std::span<T> out,
                    std::int64_t lo, std::int64_t hi) {
  for (std::int64_t d = 1; d <= hi; ++d) {
    const T& ad = a[d - 1];
    if (ad.is_zero()) continue;
    const std::int64_t first = (lo + d - 1) / d;
    for (std::int64_t q = first, m = first * d; m <= hi; ++q, m += d) {
      const T& bq = b[q - 1];
      if (bq.is_zero()) continue;
      out[m - 1].add_product(ad, bq);
    }
  }
}

}  // namespace

template <Coefficient T>
void convolve_serial(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  const auto n = static_cast<std::int64_t>(out.size());
  std::fill(out.begin(), out.end(), T());
  convolve_block(a, b, out, 1, n);
}

template <Coefficient T>
void convolve_parallel(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  const auto n = static_cast<std::int64_t>(out.size());
  std::fill(out.begin(), out.end(), T());
  const std::int64_t blocks = std::min<std::int64_t>(n, 4 * std::max(1, max_threads()));
  const std::int64_t width = (n + blocks - 1) / blocks;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::int64_t lo = blk * width + 1;
    const std::int64_t hi = std::min(n, lo + width - 1);
    if (lo <= hi) convolve_block(a, b, out, lo, hi);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template void convolve_serial<Rational>(std::span<const Rational>, std::span<const Rational>,
                                        std::span<Rational>);
template void convolve_serial<Complex>(std::span<const Complex>, std::span<const Complex>,
                                       std::span<Complex>);
template void convolve_parallel<Rational>(std::span<const Rational>, std::span<const Rational>,
                                          std::span<Rational>);
template void convolve_parallel<Complex>(std::span<const Complex>, std::span<const Complex>,
                                         std::span<Complex>);

}  // namespace arith::kernels
