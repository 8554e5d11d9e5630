#pragma once

// The three circulant operator families: the general spectral-reshaping
// operator M(lambda, r, psi), its geometric-progression closed form MA(r, psi)
// for analytic extension, and the conjugation kernel MH (the tilde operator).
// Kernels are built eagerly once and applied via fast circular convolution.

#include <cstddef>

#include "harmonic/fft.hpp"
#include "harmonic/spectrum.hpp"
#include "harmonic/types.hpp"

namespace harmonic {

enum class OperatorKind { general, analytic_extension, conjugation };

// Gains lambda_1..lambda_K plus the radius ratio r and phase shift psi of the
// reshaping operator, K = floor((N-1)/2) for the target grid.
struct SpectralProfile {
  std::vector<double> lambda;
  double r = 1.0;
  double psi = 0.0;
};

inline SpectralProfile identity_profile(std::size_t n) {
  return SpectralProfile{std::vector<double>(harmonic_bins(n), 1.0), 1.0, 0.0};
}

// An N-point circulant kernel (first column m), applied as
// (M x)_l = sum_j m_{(l-j) mod N} x_j.  Immutable after construction.
struct CirculantOperator {
  std::size_t n = 0;
  ComplexSignal kernel;
  OperatorKind kind = OperatorKind::general;

  ComplexSignal apply(const RealSignal& u) const {
    check_signal(u, "CirculantOperator::apply");
    require(u.size() == n, "CirculantOperator::apply: signal length != operator size");
    return circular_convolve(kernel, to_complex(u));
  }
};

namespace detail {

inline void check_profile(std::size_t n, const SpectralProfile& p, const char* what) {
  require(n >= 3, std::string(what) + ": n must be >= 3");
  require(p.lambda.size() == harmonic_bins(n),
          std::string(what) + ": profile length != floor((n-1)/2)");
  require(all_finite(p.lambda), std::string(what) + ": non-finite gains");
  require(std::isfinite(p.r) && p.r >= 0.0, std::string(what) + ": r must be finite and >= 0");
  require(std::isfinite(p.psi), std::string(what) + ": psi must be finite");
}

// q^k by binary exponentiation; keeps roundoff near log2(k) ulp.
inline Complex cpow_u(Complex q, std::size_t k) {
  Complex out{1.0, 0.0};
  while (k != 0) {
    if (k & 1u) out *= q;
    q *= q;
    k >>= 1;
  }
  return out;
}

}  // namespace detail

// Kernel entry for offset d: (2/N) sum_{k=1..K} lambda_k r^k exp(i(2*pi*d/N + psi)k),
// by direct summation.  O(N*K) build, done once.
inline CirculantOperator build_general(std::size_t n, const SpectralProfile& profile) {
  detail::check_profile(n, profile, "build_general");
  const std::size_t k_max = harmonic_bins(n);
  CirculantOperator op{n, ComplexSignal(n), OperatorKind::general};
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t d = 0; d < n; ++d) {
    const Complex q = profile.r * std::polar(1.0, grid_angle(d, n) + profile.psi);
    Complex power{1.0, 0.0};
    Complex acc{};
    for (std::size_t k = 1; k <= k_max; ++k) {
      power *= q;
      acc += profile.lambda[k - 1] * power;
    }
    op.kernel[d] = scale * acc;
  }
  return op;
}

// The lambda == 1 case collapses to a geometric sum: with
// q = r exp(i(2*pi*d/N + psi)) the entry is (2/N) q (q^K - 1)/(q - 1), with
// the limit value (2/N) K on the singular branch |q - 1| < 1e-9.
inline CirculantOperator build_analytic_extension(std::size_t n, double r, double psi) {
  require(n >= 3, "build_analytic_extension: n must be >= 3");
  require(std::isfinite(r) && r >= 0.0, "build_analytic_extension: r must be finite and >= 0");
  require(std::isfinite(psi), "build_analytic_extension: psi must be finite");
  const std::size_t k_max = harmonic_bins(n);
  CirculantOperator op{n, ComplexSignal(n), OperatorKind::analytic_extension};
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t d = 0; d < n; ++d) {
    const Complex q = r * std::polar(1.0, grid_angle(d, n) + psi);
    if (std::abs(q - 1.0) < 1e-9) {
      op.kernel[d] = scale * static_cast<double>(k_max);
    } else {
      op.kernel[d] = scale * q * (detail::cpow_u(q, k_max) - 1.0) / (q - 1.0);
    }
  }
  return op;
}

// Conjugation kernel MH: real, zero diagonal.  Odd N:
// m_d = [cos(pi d/N) - (-1)^d] / [N sin(pi d/N)]; even N: zero for even d,
// 2 cos(pi d/N) / [N sin(pi d/N)] for odd d.
inline CirculantOperator build_conjugation(std::size_t n) {
  require(n >= 3, "build_conjugation: n must be >= 3");
  CirculantOperator op{n, ComplexSignal(n, Complex{}), OperatorKind::conjugation};
  const bool odd = (n % 2 != 0);
  for (std::size_t d = 1; d < n; ++d) {
    const double theta = pi * static_cast<double>(d) / static_cast<double>(n);
    const double parity = (d % 2 == 0) ? 1.0 : -1.0;
    double v = 0.0;
    if (odd) {
      v = (std::cos(theta) - parity) / (static_cast<double>(n) * std::sin(theta));
    } else if (d % 2 != 0) {
      v = 2.0 * std::cos(theta) / (static_cast<double>(n) * std::sin(theta));
    }
    op.kernel[d] = Complex(v, 0.0);
  }
  return op;
}

// Harmonic conjugate via MH; kills the mean and, for even N, the Nyquist bin.
inline RealSignal tilde(const RealSignal& u) {
  check_signal(u, "tilde");
  return real_part(build_conjugation(u.size()).apply(u));
}

// Corollary-form spectrum prediction:
// a'_k = lambda_k r^k (a_k cos k psi + b_k sin k psi),
// b'_k = lambda_k r^k (b_k cos k psi - a_k sin k psi); DC and Nyquist go to 0.
inline AfcSpectrum predict_spectrum(const AfcSpectrum& s, const SpectralProfile& profile) {
  require(s.n >= 3, "predict_spectrum: spectrum length must be >= 3");
  detail::check_profile(s.n, profile, "predict_spectrum");
  const std::size_t k_max = harmonic_bins(s.n);
  require(s.a.size() == k_max + 1 && s.b.size() == k_max + 1,
          "predict_spectrum: coefficient count does not match n");
  AfcSpectrum out;
  out.n = s.n;
  out.a.assign(k_max + 1, 0.0);
  out.b.assign(k_max + 1, 0.0);
  out.nyquist = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double gain = profile.lambda[k - 1] * std::pow(profile.r, static_cast<double>(k));
    const double c = std::cos(static_cast<double>(k) * profile.psi);
    const double sn = std::sin(static_cast<double>(k) * profile.psi);
    out.a[k] = gain * (s.a[k] * c + s.b[k] * sn);
    out.b[k] = gain * (s.b[k] * c - s.a[k] * sn);
  }
  return out;
}

// Coefficient-domain form of the same action: bins 1..K are scaled by
// lambda_k r^k exp(i psi k); DC, Nyquist and conjugate bins are annihilated.
inline ComplexSpectrum predict_row_coefficients(const ComplexSpectrum& s,
                                                const SpectralProfile& profile) {
  require(s.n >= 3 && s.c.size() == s.n, "predict_row_coefficients: bad spectrum");
  detail::check_profile(s.n, profile, "predict_row_coefficients");
  const std::size_t k_max = harmonic_bins(s.n);
  ComplexSpectrum out;
  out.n = s.n;
  out.c.assign(s.n, Complex{});
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double gain = profile.lambda[k - 1] * std::pow(profile.r, static_cast<double>(k));
    out.c[k] = gain * std::polar(1.0, profile.psi * static_cast<double>(k)) * s.c[k];
  }
  return out;
}

}  // namespace harmonic
