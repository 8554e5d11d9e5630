#include <catch2/catch_amalgamated.hpp>

#include "harmonic/analytic.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

// boundary real part of W(z) = 1/(1 - a z)
RealSignal geometric_real_part(std::size_t n, double a) {
  RealSignal u(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Complex z = std::polar(1.0, grid_angle(t, n));
    u[t] = (1.0 / (1.0 - a * z)).real();
  }
  return u;
}

}  // namespace

TEST_CASE("extend recovers a geometric series on an interior circle") {
  const std::size_t n = 128;
  const double a = 0.5;
  const RealSignal u = geometric_real_part(n, a);
  const ComplexSignal out = extend(u, 0.6, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex z = 0.6 * std::polar(1.0, grid_angle(j, n));
    const Complex expected = 1.0 / (1.0 - a * z) - 1.0;  // c_0 = 1 dropped
    REQUIRE(std::abs(out[j] - expected) < 1e-8);
  }
}

TEST_CASE("extend against closed-form maps at several radii") {
  const std::size_t n = 64;
  struct Probe {
    std::function<Complex(Complex)> w;
  };
  const std::vector<Probe> probes = {
      {[](Complex z) { return z; }},
      {[](Complex z) { return z * z; }},
      {[](Complex z) { return 1.0 / (1.0 - 0.3 * z); }},
      {[](Complex z) { return 1.0 / (1.0 - 0.5 * z); }},
  };
  for (const auto& probe : probes) {
    RealSignal u(n);
    for (std::size_t t = 0; t < n; ++t)
      u[t] = probe.w(std::polar(1.0, grid_angle(t, n))).real();
    const Complex c0 = probe.w(Complex{});
    for (double r : {0.25, 0.5, 0.9}) {
      const ComplexSignal out = extend(u, r, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const Complex expected = probe.w(r * std::polar(1.0, grid_angle(j, n))) - c0;
        REQUIRE(std::abs(out[j] - expected) < 1e-8);
      }
    }
  }
}

TEST_CASE("extend with psi rotates the evaluation circle") {
  const std::size_t n = 64;
  const double a = 0.4, r = 0.7, psi = 0.9;
  const RealSignal u = geometric_real_part(n, a);
  const ComplexSignal out = extend(u, r, psi);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex z = r * std::polar(1.0, grid_angle(j, n) + psi);
    REQUIRE(std::abs(out[j] - (1.0 / (1.0 - a * z) - 1.0)) < 1e-9);
  }
}

TEST_CASE("extend at r = 1 splits into conjugate channels") {
  auto gen = oracles::rng(3);
  for (std::size_t n : {16u, 31u}) {
    const RealSignal u = oracles::random_real(gen, n);
    const ComplexSignal out = extend(u, 1.0, 0.0);
    const RealSignal conj = tilde(u);

    // real channel: u minus its mean and (even n) Nyquist part
    const AfcSpectrum s = afc(u);
    for (std::size_t j = 0; j < n; ++j) {
      double expected_re = u[j] - 0.5 * s.a[0];
      if (n % 2 == 0) expected_re -= s.nyquist * (j % 2 == 0 ? 1.0 : -1.0);
      REQUIRE(out[j].real() == Catch::Approx(expected_re).margin(1e-10));
      REQUIRE(out[j].imag() == Catch::Approx(conj[j]).margin(1e-10));
    }
  }
}

TEST_CASE("extend of a constant vanishes, extend at r = 0 vanishes") {
  const RealSignal c(16, 2.5);
  REQUIRE(oracles::max_abs(extend(c, 0.5, 0.0)) < 1e-13);
  auto gen = oracles::rng(4);
  const RealSignal u = oracles::random_real(gen, 16);
  REQUIRE(oracles::max_abs(extend(u, 0.0, 0.0)) < 1e-13);
}

TEST_CASE("analytic signal basics") {
  const std::size_t n = 16;
  RealSignal u(n);
  for (std::size_t t = 0; t < n; ++t) u[t] = std::cos(3.0 * grid_angle(t, n));
  const ComplexSignal w = analytic_signal(u);
  for (std::size_t j = 0; j < n; ++j) {
    REQUIRE(w[j].real() == u[j]);  // exact by construction
    REQUIRE(std::abs(w[j] - std::polar(1.0, 3.0 * grid_angle(j, n))) < 1e-12);
  }
  const ComplexSignal flat = analytic_signal(RealSignal(9, 1.25));
  for (const auto& v : flat) {
    REQUIRE(v.real() == 1.25);
    REQUIRE(std::abs(v.imag()) < 1e-13);
  }
}

TEST_CASE("wave reinstatement reproduces an outer function") {
  const std::size_t n = 64;
  RealSignal density(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Complex f = 1.0 + 0.5 * std::polar(1.0, grid_angle(t, n));
    density[t] = std::norm(f);
  }
  const ComplexSignal psi = reinstate_wave(density);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex expected = 1.0 + 0.5 * std::polar(1.0, grid_angle(j, n));
    REQUIRE(std::abs(psi[j] - expected) < 1e-9);
  }
}

TEST_CASE("wave reinstatement preserves the density exactly") {
  auto gen = oracles::rng(8);
  for (std::size_t n : {16u, 31u}) {
    const RealSignal d = oracles::random_real(gen, n, 0.25, 4.0);
    const ComplexSignal psi = reinstate_wave(d);
    for (std::size_t j = 0; j < n; ++j)
      REQUIRE(std::norm(psi[j]) == Catch::Approx(d[j]).epsilon(1e-14));
  }
  const ComplexSignal unit = reinstate_wave(RealSignal(9, 1.0));
  for (const auto& v : unit) REQUIRE(std::abs(v - 1.0) < 1e-13);
}

TEST_CASE("wave reinstatement reproduces random outer functions") {
  auto gen = oracles::rng(12);
  const std::size_t n = 64;
  // F = exp(h), h a random analytic polynomial with real constant term
  const auto h = oracles::random_analytic(gen, harmonic_bins(n) / 2);
  const double h0 = 0.3;
  RealSignal density(n);
  ComplexSignal expected(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Complex z = std::polar(1.0, grid_angle(t, n));
    expected[t] = std::exp(h0 + h(z));
    density[t] = std::norm(expected[t]);
  }
  const ComplexSignal psi = reinstate_wave(density);
  REQUIRE(oracles::max_abs_diff(psi, expected) < 1e-8 * oracles::max_abs(expected));
}

TEST_CASE("non-positive densities are rejected") {
  RealSignal d(9, 1.0);
  d[4] = 0.0;
  REQUIRE_THROWS_AS(reinstate_wave(d), std::domain_error);
  d[4] = -0.5;
  REQUIRE_THROWS_AS(reinstate_wave(d), std::domain_error);
}
