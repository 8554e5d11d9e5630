#pragma once

// Analytic continuation from boundary real-part samples, analytic-signal
// construction, and wave-function reinstatement from a probability density.

#include <cstddef>

#include "harmonic/operators.hpp"
#include "harmonic/types.hpp"

namespace harmonic {

// Values of the analytic completion of u on the concentric circle of radius
// ratio r and phase shift psi, minus the constant term: W(r e^{i(t+psi)}) - c_0.
// Accuracy holds for r inside the convergence radius of the underlying
// function; beyond it the result is unpredictable.
inline ComplexSignal extend(const RealSignal& u, double r, double psi) {
  check_signal(u, "extend");
  return build_analytic_extension(u.size(), r, psi).apply(u);
}

// u + i*tilde(u); the real part is exactly u.
inline ComplexSignal analytic_signal(const RealSignal& u) {
  check_signal(u, "analytic_signal");
  const RealSignal v = tilde(u);
  ComplexSignal w(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) w[j] = Complex(u[j], v[j]);
  return w;
}

// Outer-function reconstruction from boundary modulus data:
// Psi = sqrt(density) * exp(i * tilde(ln sqrt(density))).  The free global
// phase is fixed by the tilde operator's zero-mean convention.
inline ComplexSignal reinstate_wave(const RealSignal& density) {
  check_signal(density, "reinstate_wave");
  for (double d : density)
    if (!(d > 0.0))
      throw std::domain_error("reinstate_wave: density must be strictly positive on the grid");
  const std::size_t n = density.size();
  RealSignal half_log(n);
  for (std::size_t j = 0; j < n; ++j) half_log[j] = 0.5 * std::log(density[j]);
  const RealSignal phase = tilde(half_log);
  ComplexSignal psi(n);
  for (std::size_t j = 0; j < n; ++j) psi[j] = std::polar(std::sqrt(density[j]), phase[j]);
  return psi;
}

}  // namespace harmonic
