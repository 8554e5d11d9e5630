#include <catch2/catch_amalgamated.hpp>

#include "harmonic/hcorr.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

RealSignal tone(std::size_t n, double k, double phase = 0.0) {
  RealSignal u(n);
  for (std::size_t t = 0; t < n; ++t) u[t] = std::cos(k * grid_angle(t, n) + phase);
  return u;
}

RealSignal sine(std::size_t n, double k = 1.0) {
  RealSignal u(n);
  for (std::size_t t = 0; t < n; ++t) u[t] = std::sin(k * grid_angle(t, n));
  return u;
}

}  // namespace

TEST_CASE("hcov of elementary pairs") {
  const std::size_t n = 16;
  const RealSignal c = tone(n, 1.0), s = sine(n);
  REQUIRE(std::abs(hcov(c, c) - Complex{1.0, 0.0}) < 1e-12);
  REQUIRE(std::abs(hcov(c, s) - Complex{0.0, -1.0}) < 1e-12);
  REQUIRE(std::abs(hcov(c, RealSignal(n, 4.2))) < 1e-13);
}

TEST_CASE("hcorr rotation ladder of an analytic function") {
  auto gen = oracles::rng(61);
  const std::size_t n = 257;
  const auto w = oracles::random_analytic(gen, 8);
  const ComplexSignal boundary = w.boundary_samples(n);
  const RealSignal ref = real_part(boundary);
  const struct {
    double phi;
    Complex expected;
  } cases[] = {{0.0, {1.0, 0.0}},
               {pi / 2.0, {0.0, 1.0}},
               {pi, {-1.0, 0.0}},
               {3.0 * pi / 2.0, {0.0, -1.0}}};
  for (const auto& c : cases) {
    ComplexSignal rotated(n);
    for (std::size_t j = 0; j < n; ++j) rotated[j] = boundary[j] * std::polar(1.0, c.phi);
    const HCResult hc = hcorr(ref, real_part(rotated));
    REQUIRE(std::abs(hc.correlation - c.expected) < 1e-9);
  }
}

TEST_CASE("self correlation is exactly one") {
  auto gen = oracles::rng(62);
  for (std::size_t n : {9u, 16u, 100u}) {
    const RealSignal u = oracles::random_real(gen, n);
    const HCResult hc = hcorr(u, u);
    REQUIRE(std::abs(hc.correlation - Complex{1.0, 0.0}) < 1e-10);
  }
}

TEST_CASE("correlation magnitude is bounded by one") {
  auto gen = oracles::rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 16 + 2 * (trial % 9);
    const RealSignal u = oracles::random_band_limited(gen, n);
    const RealSignal v = oracles::random_band_limited(gen, n);
    REQUIRE(std::abs(hcorr(u, v).correlation) <= 1.0 + 1e-9);
  }
}

TEST_CASE("hcorr is invariant under positive affine rescaling") {
  auto gen = oracles::rng(64);
  const RealSignal u = oracles::random_real(gen, 31);
  const RealSignal v = oracles::random_real(gen, 31);
  const Complex base = hcorr(u, v).correlation;
  RealSignal scaled(31);
  for (std::size_t j = 0; j < 31; ++j) scaled[j] = 2.75 * u[j] - 4.0;
  REQUIRE(std::abs(hcorr(scaled, v).correlation - base) < 1e-10);
}

TEST_CASE("constant inputs are a domain error") {
  const RealSignal u = tone(16, 1.0);
  REQUIRE_THROWS_AS(hcorr(u, RealSignal(16, 7.0)), std::domain_error);
  REQUIRE_THROWS_AS(hcorr(RealSignal(16, 0.0), u), std::domain_error);
}

TEST_CASE("tilde scalar action") {
  const std::size_t n = 16;
  const RealSignal c = tone(n, 2.0);
  REQUIRE(oracles::max_abs_diff(tilde_scalar_mul({1.0, 0.0}, c), c) < 1e-13);
  REQUIRE(oracles::max_abs_diff(tilde_scalar_mul({0.0, 1.0}, c), sine(n, 2.0)) < 1e-11);

  auto gen = oracles::rng(65);
  const RealSignal u = oracles::random_band_limited(gen, n);
  const RealSignal twice = tilde_scalar_mul({0.0, 1.0}, tilde_scalar_mul({0.0, 1.0}, u));
  RealSignal neg(n);
  for (std::size_t j = 0; j < n; ++j) neg[j] = -u[j];
  REQUIRE(oracles::max_abs_diff(twice, neg) < 1e-10);
}

TEST_CASE("tilde algebra properties hold on random signals") {
  auto gen = oracles::rng(66);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = (trial % 2 == 0) ? 31 : 16;
    const RealSignal u = oracles::random_band_limited(gen, n);
    const RealSignal v = oracles::random_band_limited(gen, n);
    const RealSignal x = oracles::random_band_limited(gen, n);
    const RealSignal y = oracles::random_band_limited(gen, n);
    const Complex lambda{dist(gen), dist(gen)};
    const Complex mu{dist(gen), dist(gen)};

    // (1) scalar action splits into real and conjugate parts
    const RealSignal ut = tilde(u);
    RealSignal manual(n);
    for (std::size_t j = 0; j < n; ++j)
      manual[j] = lambda.real() * u[j] + lambda.imag() * ut[j];
    REQUIRE(oracles::max_abs_diff(tilde_scalar_mul(lambda, u), manual) < 1e-9);

    // (3) additivity in the scalar argument
    RealSignal sum_lhs = tilde_scalar_mul(lambda + mu, u);
    const RealSignal part1 = tilde_scalar_mul(lambda, u);
    const RealSignal part2 = tilde_scalar_mul(mu, u);
    RealSignal sum_rhs(n);
    for (std::size_t j = 0; j < n; ++j) sum_rhs[j] = part1[j] + part2[j];
    REQUIRE(oracles::max_abs_diff(sum_lhs, sum_rhs) < 1e-9);

    // (4) conjugate symmetry
    REQUIRE(std::abs(hcov(u, v) - std::conj(hcov(v, u))) < 1e-9);

    // (5) sesquilinearity in tilde-scalar combinations
    const RealSignal lx = tilde_scalar_mul(lambda, x);
    const RealSignal my = tilde_scalar_mul(mu, y);
    RealSignal combo(n);
    for (std::size_t j = 0; j < n; ++j) combo[j] = lx[j] + my[j];
    const Complex lhs = hcov(u, combo);
    const Complex rhs = std::conj(lambda) * hcov(u, x) + std::conj(mu) * hcov(u, y);
    REQUIRE(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("property two illustrative identity") {
  // [sin ~ cos] ~ sin == sin ~ [cos ~ sin], read through the scalar action:
  // the right action of mu is the left action of conj(mu).
  const std::size_t n = 32;
  const RealSignal s = sine(n), c = tone(n, 1.0);
  const Complex sc = hcov(s, c);
  const Complex cs = hcov(c, s);
  REQUIRE(std::abs(sc - Complex{0.0, 1.0}) < 1e-12);
  REQUIRE(std::abs(cs - Complex{0.0, -1.0}) < 1e-12);
  const RealSignal lhs = tilde_scalar_mul(sc, s);
  const RealSignal rhs = tilde_scalar_mul(std::conj(cs), s);
  REQUIRE(oracles::max_abs_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("ranking orders by distance from perfect correlation") {
  auto gen = oracles::rng(67);
  const std::size_t n = 64;
  const auto w = oracles::random_analytic(gen, 6);
  const ComplexSignal boundary = w.boundary_samples(n);
  const RealSignal ref = real_part(boundary);

  std::vector<std::pair<std::string, RealSignal>> candidates;
  candidates.emplace_back("self", ref);
  RealSignal negated(n);
  for (std::size_t j = 0; j < n; ++j) negated[j] = -ref[j] + 3.0;
  candidates.emplace_back("negated", negated);
  for (double phi : {0.4, 1.2, 2.2}) {
    ComplexSignal rotated(n);
    for (std::size_t j = 0; j < n; ++j) rotated[j] = boundary[j] * std::polar(1.0, phi);
    candidates.emplace_back("phase" + std::to_string(phi).substr(0, 3), real_part(rotated));
  }
  candidates.emplace_back("flat", RealSignal(n, 1.0));

  const auto ranked = rank(ref, candidates);
  REQUIRE(ranked.size() == candidates.size());
  REQUIRE(ranked.front().label == "self");
  REQUIRE(std::abs(ranked.front().hc.correlation - Complex{1.0, 0.0}) < 1e-10);
  REQUIRE(ranked.front().pearson == Catch::Approx(1.0).margin(1e-12));
  // phase-lagged copies rank monotonically in |e^{i phi} - 1|
  std::vector<std::string> expected_order = {"self", "phase0.4", "phase1.2", "phase2.2",
                                             "negated"};
  for (std::size_t i = 0; i < expected_order.size(); ++i)
    REQUIRE(ranked[i].label == expected_order[i]);
  // negated series sits at HC ~ -1, constant series is flagged last
  REQUIRE(std::abs(ranked[4].hc.correlation - Complex{-1.0, 0.0}) < 1e-9);
  REQUIRE(ranked.back().degenerate);
  REQUIRE(ranked.back().label == "flat");
}

TEST_CASE("magnitude key ranks phase-agnostically") {
  auto gen = oracles::rng(68);
  const std::size_t n = 64;
  const auto w = oracles::random_analytic(gen, 6);
  const ComplexSignal boundary = w.boundary_samples(n);
  const RealSignal ref = real_part(boundary);
  ComplexSignal quarter(n);
  for (std::size_t j = 0; j < n; ++j) quarter[j] = boundary[j] * Complex{0.0, 1.0};
  RealSignal noisy = oracles::random_band_limited(gen, n);
  std::vector<std::pair<std::string, RealSignal>> candidates;
  candidates.emplace_back("quarter", real_part(quarter));
  candidates.emplace_back("noise", noisy);
  const auto ranked = rank(ref, candidates, RankKey::magnitude);
  REQUIRE(ranked.front().label == "quarter");  // |HC| = 1 beats unrelated noise
}
