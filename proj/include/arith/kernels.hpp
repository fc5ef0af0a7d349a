#pragma once

// Dirichlet convolution kernels. The serial kernel is the reference; the
// parallel kernel must reproduce it bit-for-bit, so both accumulate every
// output c[n] over divisors d of n in ascending order.

#include <cstdint>
#include <span>

#include "arith/numerics.hpp"

namespace arith::kernels {

/// out[n] = sum_{d | n} a[d] * b[n/d] over 0-based spans holding 1..N.
/// Outer loop d ascending, inner loop over multiples of d ascending.
template <Coefficient T>
void convolve_serial(std::span<const T> a, std::span<const T> b, std::span<T> out);

/// Same result as convolve_serial. Output indices are split into contiguous
/// blocks, one OpenMP task per block; inside a block d still runs ascending.
template <Coefficient T>
void convolve_parallel(std::span<const T> a, std::span<const T> b, std::span<T> out);

/// Bounds at or above this use the parallel kernel in dirichlet_mul.
inline constexpr std::int64_t kParallelThreshold = 1 << 13;

int max_threads();

}  // namespace arith::kernels
