// Reshape the spectrum of a noisy two-tone signal with a Gaussian band
// profile and print the coefficient pairs before and after.

#include <iostream>
#include <random>

#include "harmonic/analytic.hpp"
#include "harmonic/operators.hpp"

int main() {
  using namespace harmonic;

  const std::size_t n = 64;
  std::mt19937 gen(12345);
  std::normal_distribution<double> noise(0.0, 0.2);
  RealSignal u(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double s = grid_angle(t, n);
    u[t] = std::cos(3.0 * s) + 0.5 * std::sin(11.0 * s) + noise(gen);
  }

  SpectralProfile p;
  p.lambda.resize(harmonic_bins(n));
  for (std::size_t k = 1; k <= p.lambda.size(); ++k) {
    const double d = (static_cast<double>(k) - 3.0) / 2.0;
    p.lambda[k - 1] = std::exp(-d * d);  // keep the band around k = 3
  }

  const ComplexSignal filtered = build_general(n, p).apply(u);
  const AfcSpectrum before = afc(u);
  const AfcSpectrum after = afc(real_part(filtered));

  std::cout << "k\t|a,b| before\t|a,b| after\n";
  for (std::size_t k = 1; k <= 12; ++k)
    std::cout << k << '\t' << std::hypot(before.a[k], before.b[k]) << '\t'
              << std::hypot(after.a[k], after.b[k]) << '\n';
  return 0;
}
