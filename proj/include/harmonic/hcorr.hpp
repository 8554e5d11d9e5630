#pragma once

// Harmonic covariation and correlation of oscillative signals, the tilde
// scalar action, and a similarity ranking over labeled series.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "harmonic/operators.hpp"
#include "harmonic/types.hpp"

namespace harmonic {

struct HCResult {
  Complex covariation;  // U~V
  Complex correlation;  // HC(U, V)
  std::size_t n = 0;
};

namespace detail {

// Centered signal with the (even n) Nyquist component projected out; the
// tilde operator annihilates both, so every hcorr quantity lives in the
// bins 1..K where ~~ = -1 holds.
inline RealSignal oscillative_part(const RealSignal& u) {
  const std::size_t n = u.size();
  double mean = 0.0;
  for (double v : u) mean += v;
  mean /= static_cast<double>(n);
  RealSignal out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = u[j] - mean;
  if (n % 2 == 0) {
    double alt = 0.0;
    for (std::size_t j = 0; j < n; ++j) alt += (j % 2 == 0 ? out[j] : -out[j]);
    alt /= static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) out[j] -= (j % 2 == 0 ? alt : -alt);
  }
  return out;
}

// Inner product (2/n) sum x_t y_t, the discrete counterpart of (1/pi) times
// the integral over one period.
inline double oscillative_dot(const RealSignal& x, const RealSignal& y) {
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * y[j];
  return 2.0 * acc / static_cast<double>(x.size());
}

inline Complex hcov_centered(const RealSignal& uc, const RealSignal& vc) {
  const RealSignal vt = tilde(vc);
  return Complex(oscillative_dot(uc, vc), oscillative_dot(uc, vt));
}

}  // namespace detail

// U~V = <u_c, v_c> + i <u_c, tilde(v_c)> over mean-free (and Nyquist-free)
// parts of the inputs.
inline Complex hcov(const RealSignal& u, const RealSignal& v) {
  check_signal(u, "hcov");
  check_signal(v, "hcov");
  require(u.size() == v.size(), "hcov: length mismatch");
  return detail::hcov_centered(detail::oscillative_part(u), detail::oscillative_part(v));
}

// HC(U, V) = U~V / sqrt(<u_c,u_c> <v_c,v_c>); 1 for in-phase identical
// oscillations, i for quadrature.
inline HCResult hcorr(const RealSignal& u, const RealSignal& v) {
  check_signal(u, "hcorr");
  check_signal(v, "hcorr");
  require(u.size() == v.size(), "hcorr: length mismatch");
  const RealSignal uc = detail::oscillative_part(u);
  const RealSignal vc = detail::oscillative_part(v);
  const double var_u = detail::oscillative_dot(uc, uc);
  const double var_v = detail::oscillative_dot(vc, vc);
  if (var_u <= 0.0 || var_v <= 0.0)
    throw std::domain_error("hcorr: zero variance (constant input)");
  HCResult out;
  out.n = u.size();
  out.covariation = detail::hcov_centered(uc, vc);
  out.correlation = out.covariation / std::sqrt(var_u * var_v);
  return out;
}

// (a + ib) ~ u = a*u + b*tilde(u).
inline RealSignal tilde_scalar_mul(Complex lambda, const RealSignal& u) {
  check_signal(u, "tilde_scalar_mul");
  require(is_finite(lambda), "tilde_scalar_mul: non-finite scalar");
  const RealSignal ut = tilde(u);
  RealSignal out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    out[j] = lambda.real() * u[j] + lambda.imag() * ut[j];
  return out;
}

// Standard centered correlation coefficient, the side-by-side baseline.
inline double pearson(const RealSignal& u, const RealSignal& v) {
  require(u.size() == v.size() && u.size() >= 3, "pearson: bad input lengths");
  const std::size_t n = u.size();
  double mu = 0.0, mv = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    mu += u[j];
    mv += v[j];
  }
  mu /= static_cast<double>(n);
  mv /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double du = u[j] - mu;
    const double dv = v[j] - mv;
    sxy += du * dv;
    sxx += du * du;
    syy += dv * dv;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::domain_error("pearson: zero variance (constant input)");
  return sxy / std::sqrt(sxx * syy);
}

enum class RankKey {
  distance_from_one,  // |HC - 1| ascending: closest to perfect in-phase first
  magnitude           // |HC| descending: phase-agnostic similarity
};

struct RankedEntry {
  std::string label;
  HCResult hc;
  double pearson = 0.0;
  bool degenerate = false;  // constant series: flagged, not ranked
};

// Rank candidates against a reference; degenerate (constant) series are
// appended after the ranked ones.  Ties break by label.
inline std::vector<RankedEntry> rank(const RealSignal& reference,
                                     const std::vector<std::pair<std::string, RealSignal>>& candidates,
                                     RankKey key = RankKey::distance_from_one) {
  check_signal(reference, "rank");
  std::vector<RankedEntry> out;
  out.reserve(candidates.size());
  for (const auto& [label, series] : candidates) {
    require(series.size() == reference.size(), "rank: series '" + label + "' length mismatch");
    RankedEntry entry;
    entry.label = label;
    try {
      entry.hc = hcorr(reference, series);
      entry.pearson = pearson(reference, series);
    } catch (const std::domain_error&) {
      entry.degenerate = true;
    }
    out.push_back(std::move(entry));
  }
  std::stable_sort(out.begin(), out.end(), [key](const RankedEntry& x, const RankedEntry& y) {
    if (x.degenerate != y.degenerate) return !x.degenerate;
    if (x.degenerate) return x.label < y.label;
    double kx = 0.0, ky = 0.0;
    if (key == RankKey::distance_from_one) {
      kx = std::abs(x.hc.correlation - 1.0);
      ky = std::abs(y.hc.correlation - 1.0);
    } else {
      kx = -std::abs(x.hc.correlation);
      ky = -std::abs(y.hc.correlation);
    }
    if (kx != ky) return kx < ky;
    return x.label < y.label;
  });
  return out;
}

}  // namespace harmonic
