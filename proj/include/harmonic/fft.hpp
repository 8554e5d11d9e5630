#pragma once

// Length-agnostic fast circular convolution and discrete Fourier utilities.
// Arbitrary N is handled by zero-padded embedding into a power-of-two
// transform, so the cost stays O(N log N) even for prime N.

#include <algorithm>
#include <cstddef>
#include <utility>

#include "harmonic/types.hpp"

namespace harmonic {
namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Iterative radix-2 kernel, unscaled in both directions.  len(x) must be a
// power of two.  Twiddles come from one std::polar table per call, so the
// roundoff stays near log2(N) ulp and there is no shared state.
inline void fft_pow2(ComplexSignal& x, bool inverse) {
  const std::size_t n = x.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  const double sign = inverse ? 1.0 : -1.0;
  ComplexSignal tw(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j)
    tw[j] = std::polar(1.0, sign * two_pi * static_cast<double>(j) / static_cast<double>(n));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = x[i + k];
        const Complex v = x[i + k + half] * tw[k * stride];
        x[i + k] = u + v;
        x[i + k + half] = u - v;
      }
    }
  }
}

// Bluestein chirp embedding: an N-point DFT becomes a circular convolution
// of power-of-two length >= 2N-1.  t^2 is reduced mod 2N in integers before
// the angle is formed, keeping the chirp phase accurate for large N.
inline ComplexSignal bluestein(const ComplexSignal& x, bool inverse) {
  const std::size_t n = x.size();
  const std::size_t m = next_pow2(2 * n - 1);
  const double sign = inverse ? 1.0 : -1.0;
  ComplexSignal chirp(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto q = static_cast<unsigned long long>(t) * t % (2ull * n);
    chirp[t] = std::polar(1.0, sign * pi * static_cast<double>(q) / static_cast<double>(n));
  }
  ComplexSignal a(m, Complex{}), b(m, Complex{});
  for (std::size_t t = 0; t < n; ++t) a[t] = x[t] * chirp[t];
  b[0] = std::conj(chirp[0]);
  for (std::size_t t = 1; t < n; ++t) b[t] = b[m - t] = std::conj(chirp[t]);
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, true);
  const double scale = 1.0 / static_cast<double>(m);
  ComplexSignal out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

}  // namespace detail

// Unscaled forward transform, X_k = sum_t x_t exp(-2*pi*i*k*t/N), any N >= 1.
inline ComplexSignal dft(const ComplexSignal& x) {
  require(!x.empty(), "dft: empty input");
  require(all_finite(x), "dft: non-finite input");
  if (detail::is_pow2(x.size())) {
    ComplexSignal out = x;
    detail::fft_pow2(out, false);
    return out;
  }
  return detail::bluestein(x, false);
}

// Inverse transform carrying the 1/N factor, so idft(dft(x)) == x.
inline ComplexSignal idft(const ComplexSignal& x) {
  require(!x.empty(), "idft: empty input");
  require(all_finite(x), "idft: non-finite input");
  const double scale = 1.0 / static_cast<double>(x.size());
  ComplexSignal out;
  if (detail::is_pow2(x.size())) {
    out = x;
    detail::fft_pow2(out, true);
  } else {
    out = detail::bluestein(x, true);
  }
  for (auto& v : out) v *= scale;
  return out;
}

// Circular convolution c_l = sum_j a_j b_{(l-j) mod N}.  Both inputs are
// zero-padded to the smallest power of two >= 2N-1, convolved linearly via
// the radix-2 kernel, and the tail is folded back; uniform O(N log N) for
// every N including primes.
inline ComplexSignal circular_convolve(const ComplexSignal& a, const ComplexSignal& b) {
  require(a.size() == b.size(), "circular_convolve: length mismatch");
  require(!a.empty(), "circular_convolve: empty input");
  require(all_finite(a) && all_finite(b), "circular_convolve: non-finite input");
  const std::size_t n = a.size();
  if (n == 1) return {a[0] * b[0]};
  const std::size_t m = detail::next_pow2(2 * n - 1);
  ComplexSignal fa(m, Complex{}), fb(m, Complex{});
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  detail::fft_pow2(fa, false);
  detail::fft_pow2(fb, false);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  detail::fft_pow2(fa, true);
  const double scale = 1.0 / static_cast<double>(m);
  ComplexSignal out(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex v = fa[l];
    if (l + n <= 2 * n - 2) v += fa[l + n];
    out[l] = v * scale;
  }
  return out;
}

// O(N^2) reference with the same contract; the oracle side of the fast path.
inline ComplexSignal circular_convolve_direct(const ComplexSignal& a, const ComplexSignal& b) {
  require(a.size() == b.size(), "circular_convolve_direct: length mismatch");
  require(!a.empty(), "circular_convolve_direct: empty input");
  require(all_finite(a) && all_finite(b), "circular_convolve_direct: non-finite input");
  const std::size_t n = a.size();
  ComplexSignal out(n, Complex{});
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += a[j] * b[(l + n - j) % n];
    out[l] = acc;
  }
  return out;
}

}  // namespace harmonic
