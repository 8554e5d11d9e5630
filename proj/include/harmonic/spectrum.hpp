#pragma once

// Spectrum extraction: real coefficient pairs (a_k, b_k) of a sampled signal
// and complex row coefficients of a boundary function, plus the spectral
// derivative/antiderivative used by the conformal solver.

#include <cstddef>

#include "harmonic/fft.hpp"
#include "harmonic/types.hpp"

namespace harmonic {

// Real Fourier pairs a_0..a_K, b_1..b_K with K = floor((N-1)/2).  For even N
// the k = N/2 bin is reported separately with the conventional 1/N weight so
// that reconstruction is lossless; no operator ever uses it.
struct AfcSpectrum {
  std::size_t n = 0;
  std::vector<double> a;  // a[0..K]
  std::vector<double> b;  // b[0] == 0, b[1..K]
  double nyquist = 0.0;   // even n only
};

struct ComplexSpectrum {
  std::size_t n = 0;
  ComplexSignal c;  // c[0..n-1]; conjugate-symmetric for real input
};

// a_k = (2/N) sum U_t cos(2*pi*k*t/N), b_k = (2/N) sum U_t sin(2*pi*k*t/N).
inline AfcSpectrum afc(const RealSignal& u) {
  check_signal(u, "afc");
  const std::size_t n = u.size();
  const std::size_t k_max = harmonic_bins(n);
  const ComplexSignal d = dft(to_complex(u));
  AfcSpectrum s;
  s.n = n;
  s.a.assign(k_max + 1, 0.0);
  s.b.assign(k_max + 1, 0.0);
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= k_max; ++k) {
    s.a[k] = scale * d[k].real();
    s.b[k] = -scale * d[k].imag();
  }
  s.b[0] = 0.0;
  if (n % 2 == 0) s.nyquist = d[n / 2].real() / static_cast<double>(n);
  return s;
}

// c_j = (1/N) sum_t w_t exp(-2*pi*i*j*t/N).
inline ComplexSpectrum row_coefficients(const ComplexSignal& w) {
  check_signal(w, "row_coefficients");
  ComplexSpectrum s;
  s.n = w.size();
  s.c = dft(w);
  const double scale = 1.0 / static_cast<double>(s.n);
  for (auto& v : s.c) v *= scale;
  return s;
}

// Trigonometric reconstruction a_0/2 + sum(a_k cos + b_k sin) (+ Nyquist
// term for even n); exact inverse of afc up to roundoff.
inline RealSignal reconstruct(const AfcSpectrum& s) {
  require(s.n >= 3, "reconstruct: spectrum length must be >= 3");
  const std::size_t k_max = harmonic_bins(s.n);
  require(s.a.size() == k_max + 1 && s.b.size() == k_max + 1,
          "reconstruct: coefficient count does not match n");
  RealSignal u(s.n);
  for (std::size_t t = 0; t < s.n; ++t) {
    double acc = 0.5 * s.a[0];
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double ang = grid_angle(t, s.n) * static_cast<double>(k);
      acc += s.a[k] * std::cos(ang) + s.b[k] * std::sin(ang);
    }
    if (s.n % 2 == 0) acc += s.nyquist * (t % 2 == 0 ? 1.0 : -1.0);
    u[t] = acc;
  }
  return u;
}

// Signed bin frequency: k for k <= N/2, k - N above; the even-N Nyquist bin
// maps to zero so that differentiation and integration stay a proper pair.
namespace detail {
inline double signed_frequency(std::size_t k, std::size_t n) {
  if (2 * k < n) return static_cast<double>(k);
  if (2 * k == n) return 0.0;
  return static_cast<double>(k) - static_cast<double>(n);
}
}  // namespace detail

inline RealSignal spectral_derivative(const RealSignal& x) {
  check_signal(x, "spectral_derivative");
  const std::size_t n = x.size();
  ComplexSignal d = dft(to_complex(x));
  for (std::size_t k = 0; k < n; ++k) d[k] *= Complex(0.0, detail::signed_frequency(k, n));
  return real_part(idft(d));
}

// Zero-mean periodic antiderivative; the input's own mean is ignored.
inline RealSignal spectral_antiderivative(const RealSignal& x) {
  check_signal(x, "spectral_antiderivative");
  const std::size_t n = x.size();
  ComplexSignal d = dft(to_complex(x));
  d[0] = Complex{};
  for (std::size_t k = 1; k < n; ++k) {
    const double f = detail::signed_frequency(k, n);
    d[k] = (f == 0.0) ? Complex{} : d[k] / Complex(0.0, f);
  }
  return real_part(idft(d));
}

}  // namespace harmonic
