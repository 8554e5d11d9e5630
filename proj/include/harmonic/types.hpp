#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonic {

using Complex = std::complex<double>;

// Sampled signals on the uniform angular grid t_j = 2*pi*j/N, N >= 3.
using RealSignal = std::vector<double>;
using ComplexSignal = std::vector<Complex>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Free harmonic bins above DC: K = floor((N-1)/2).  The k = N/2 bin of an
// even grid is excluded; every operator in this library annihilates it.
inline std::size_t harmonic_bins(std::size_t n) { return (n - 1) / 2; }

inline double grid_angle(std::size_t j, std::size_t n) {
  return two_pi * static_cast<double>(j) / static_cast<double>(n);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <typename T>
bool all_finite(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!is_finite(x)) return false;
  return true;
}

template <typename T>
void check_signal(const std::vector<T>& u, const char* what) {
  require(u.size() >= 3, std::string(what) + ": signal length must be >= 3");
  require(all_finite(u), std::string(what) + ": signal has non-finite samples");
}

inline ComplexSignal to_complex(const RealSignal& u) {
  ComplexSignal w(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) w[j] = Complex(u[j], 0.0);
  return w;
}

inline RealSignal real_part(const ComplexSignal& w) {
  RealSignal u(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) u[j] = w[j].real();
  return u;
}

inline RealSignal imag_part(const ComplexSignal& w) {
  RealSignal u(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) u[j] = w[j].imag();
  return u;
}

}  // namespace harmonic
