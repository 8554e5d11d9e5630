#pragma once

// Riemann mapping from the unit disk to the interior of a Jordan curve by
// iterative boundary reparametrization.  Each pass measures how far the
// current boundary samples are from being the trace of a disk-analytic map
// (the dissatisfaction function) and corrects the parameter density by it;
// the fixed point satisfies both boundary identities of the analytic map.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "harmonic/analytic.hpp"
#include "harmonic/fft.hpp"
#include "harmonic/operators.hpp"
#include "harmonic/spectrum.hpp"
#include "harmonic/types.hpp"

namespace harmonic {

struct CurvePoint {
  Complex position;
  Complex derivative;  // d gamma / d tau
};

// Closed curve gamma(tau), tau-periodic with period 2*pi, together with its
// derivative.  Either wraps a caller-supplied evaluator or interpolates a
// uniform sample set band-limitedly.  The curve must be simple and
// positively oriented; that is a caller obligation, checked only indirectly
// by the solver's winding tests.
class BoundaryCurve {
 public:
  using Evaluator = std::function<CurvePoint(double)>;

  explicit BoundaryCurve(Evaluator eval) : eval_(std::move(eval)) {
    require(static_cast<bool>(eval_), "BoundaryCurve: empty evaluator");
  }

  static BoundaryCurve from_function(std::function<Complex(double)> f,
                                     std::function<Complex(double)> df) {
    require(static_cast<bool>(f) && static_cast<bool>(df),
            "BoundaryCurve: empty evaluator");
    return BoundaryCurve([f = std::move(f), df = std::move(df)](double tau) {
      return CurvePoint{f(tau), df(tau)};
    });
  }

  // Trigonometric interpolant through gamma(2*pi*m/M), m = 0..M-1.  The
  // even-M Nyquist bin is split symmetrically (a cos term) so the
  // interpolant and its derivative stay smooth.
  static BoundaryCurve from_samples(const ComplexSignal& samples) {
    check_signal(samples, "BoundaryCurve::from_samples");
    const std::size_t m = samples.size();
    ComplexSpectrum spec = row_coefficients(samples);
    return BoundaryCurve([m, c = std::move(spec.c)](double tau) {
      const Complex z = std::polar(1.0, tau);
      const Complex zc = std::conj(z);
      Complex pos = c[0];
      Complex der{};
      Complex zp{1.0, 0.0}, zn{1.0, 0.0};
      const std::size_t k_max = harmonic_bins(m);
      for (std::size_t k = 1; k <= k_max; ++k) {
        zp *= z;
        zn *= zc;
        const double fk = static_cast<double>(k);
        pos += c[k] * zp + c[m - k] * zn;
        der += Complex(0.0, fk) * (c[k] * zp - c[m - k] * zn);
      }
      if (m % 2 == 0) {
        const double half = static_cast<double>(m) / 2.0;
        pos += c[m / 2] * std::cos(half * tau);
        der -= c[m / 2] * half * std::sin(half * tau);
      }
      return CurvePoint{pos, der};
    });
  }

  CurvePoint at(double tau) const { return eval_(tau); }

 private:
  Evaluator eval_;
};

struct ConformalSolution {
  std::size_t n = 0;
  std::vector<double> t;          // reparametrization t(s_j), s_j = 2*pi*j/n
  Complex w0;                     // interior image of 0
  ComplexSignal boundary;         // gamma(t_j)
  ComplexSpectrum coefficients;   // row coefficients of boundary; c_0 ~ w0
  std::size_t iterations = 0;
  double residual = 0.0;          // final max_j |ln ns_j|
  std::vector<double> residual_history;
  RealSignal ns;                  // final dissatisfaction values
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(std::string msg, double res, std::size_t iters)
      : std::runtime_error(std::move(msg)), residual(res), iterations(iters) {}
  double residual;
  std::size_t iterations;
};

namespace detail {

inline double wrap_pm_pi(double x) { return x - two_pi * std::round(x / two_pi); }

// Nearest-branch unwrap of arg(z_j) around the grid.  The closure edge must
// complete exactly one positive turn, otherwise the curve is not simple (or
// runs clockwise) and the iteration is meaningless.
inline std::vector<double> unwrap_args(const ComplexSignal& z, const char* what) {
  const std::size_t n = z.size();
  std::vector<double> a(n);
  a[0] = std::arg(z[0]);
  for (std::size_t j = 1; j < n; ++j)
    a[j] = a[j - 1] + wrap_pm_pi(std::arg(z[j]) - a[j - 1]);
  const double winding = (a[n - 1] - a[0]) + wrap_pm_pi(std::arg(z[0]) - a[n - 1]);
  if (std::abs(winding - two_pi) > pi)
    throw std::domain_error(std::string("non-simple or mis-oriented curve: winding of ") +
                            what + " is not one positive turn");
  return a;
}

inline Complex mean(const ComplexSignal& w) {
  Complex acc{};
  for (const auto& v : w) acc += v;
  return acc / static_cast<double>(w.size());
}

}  // namespace detail

// Per-point multiplicative residual of the two boundary identities:
// ns_j = exp[ tilde( (arg dw_j - s_j - pi/2) - (arg(w_j - w0) - s_j) ) ]
//        * |dw_j| / |w_j - w0|,
// normalized to zero log-mean.  Identically 1 exactly at a disk-analytic
// boundary trace.
inline RealSignal dissatisfaction(const ComplexSignal& w, const ComplexSignal& dw_ds,
                                  const Complex w0) {
  check_signal(w, "dissatisfaction");
  require(w.size() == dw_ds.size(), "dissatisfaction: length mismatch");
  require(is_finite(w0), "dissatisfaction: non-finite center");
  const std::size_t n = w.size();
  ComplexSignal rel(n);
  for (std::size_t j = 0; j < n; ++j) {
    rel[j] = w[j] - w0;
    if (rel[j] == Complex{})
      throw std::domain_error("center collision: boundary point coincides with w0");
    if (dw_ds[j] == Complex{})
      throw std::domain_error("degenerate tangent: zero boundary derivative");
  }
  const std::vector<double> arg_rel = detail::unwrap_args(rel, "w - w0");
  const std::vector<double> arg_der = detail::unwrap_args(dw_ds, "dw/ds");
  RealSignal diff(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = grid_angle(j, n);
    const double res_tangent = arg_der[j] - s - pi / 2.0;  // tangent-angle identity
    const double res_radius = arg_rel[j] - s;              // radius-vector identity
    diff[j] = res_tangent - res_radius;
  }
  const RealSignal conj_diff = tilde(diff);
  RealSignal log_ns(n);
  double log_mean = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    log_ns[j] = conj_diff[j] + std::log(std::abs(dw_ds[j]) / std::abs(rel[j]));
    log_mean += log_ns[j];
  }
  log_mean /= static_cast<double>(n);
  RealSignal ns(n);
  for (std::size_t j = 0; j < n; ++j) ns[j] = std::exp(log_ns[j] - log_mean);
  return ns;
}

// Iterative reparametrization, started from t(s) = s.  Each pass samples the
// curve, re-estimates w0 as the boundary mean, divides the parameter density
// dt/ds by the dissatisfaction, renormalizes the density to total turn 2*pi
// and rebuilds t by spectral integration, preserving the mean of t - s.
//
// Every valid disk map of the domain is a fixed point, so with the floating
// boundary-mean w0 the solver lands on the member selected by the start;
// passing `center` pins w0 there instead and the iteration converges to the
// unique map sending 0 to that (interior) point.
inline ConformalSolution solve(const BoundaryCurve& curve, std::size_t n, double tol = 1e-10,
                               std::size_t max_iter = 50,
                               std::optional<Complex> center = std::nullopt) {
  require(n >= 16, "solve: grid size must be >= 16");
  require(std::isfinite(tol) && tol > 0.0, "solve: tolerance must be positive");
  require(max_iter >= 1, "solve: max_iter must be >= 1");
  require(!center || is_finite(*center), "solve: center must be finite");

  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = grid_angle(j, n);
  const double t_mean_offset = 0.0;  // mean of t(s) - s, fixed by the t(s)=s start

  std::vector<double> residuals;
  ComplexSignal w(n), dw(n);
  RealSignal density(n);
  double residual = 0.0;

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    RealSignal periodic(n);
    for (std::size_t j = 0; j < n; ++j) periodic[j] = t[j] - grid_angle(j, n);
    const RealSignal dp = spectral_derivative(periodic);
    for (std::size_t j = 0; j < n; ++j) density[j] = 1.0 + dp[j];

    for (std::size_t j = 0; j < n; ++j) {
      const CurvePoint cp = curve.at(t[j]);
      require(is_finite(cp.position) && is_finite(cp.derivative),
              "solve: curve evaluator returned non-finite values");
      w[j] = cp.position;
      dw[j] = cp.derivative * density[j];
    }
    const Complex w0 = center ? *center : detail::mean(w);

    RealSignal ns;
    try {
      ns = dissatisfaction(w, dw, w0);
    } catch (const std::domain_error& e) {
      throw std::domain_error("iteration " + std::to_string(iter) + ": " + e.what());
    }

    residual = 0.0;
    for (double v : ns) residual = std::max(residual, std::abs(std::log(v)));
    residuals.push_back(residual);

    if (residual < tol) {
      ConformalSolution sol;
      sol.n = n;
      sol.t = std::move(t);
      sol.w0 = w0;
      sol.boundary = w;
      sol.coefficients = row_coefficients(w);
      sol.iterations = iter;
      sol.residual = residual;
      sol.residual_history = std::move(residuals);
      sol.ns = std::move(ns);
      return sol;
    }

    double density_mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      density[j] /= ns[j];
      density_mean += density[j];
    }
    density_mean /= static_cast<double>(n);
    RealSignal fluct(n);
    for (std::size_t j = 0; j < n; ++j) fluct[j] = density[j] / density_mean - 1.0;
    const RealSignal integral = spectral_antiderivative(fluct);
    for (std::size_t j = 0; j < n; ++j) t[j] = grid_angle(j, n) + integral[j] + t_mean_offset;
  }

  throw ConvergenceError("solve: no convergence after " + std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual, max_iter);
}

// Images of the polar mesh r_i e^{i theta_j}, r_i = i/rings, theta_j =
// 2*pi*j/spokes, reconstructed from the complex boundary coefficients:
// ring_j = w0 + sum_{k=1..K} c_k r^k e^{i k theta_j}.  One inverse transform
// per ring when the spoke count matches the grid, Horner evaluation
// otherwise.
inline std::vector<ComplexSignal> evaluate_disk(const ConformalSolution& sol, std::size_t rings,
                                                std::size_t spokes) {
  require(sol.n >= 16 && sol.coefficients.c.size() == sol.n,
          "evaluate_disk: solution is not converged/populated");
  require(rings >= 1, "evaluate_disk: rings must be >= 1");
  require(spokes >= 3, "evaluate_disk: spokes must be >= 3");
  const std::size_t n = sol.n;
  const std::size_t k_max = harmonic_bins(n);
  std::vector<ComplexSignal> mesh;
  mesh.reserve(rings);
  for (std::size_t i = 1; i <= rings; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(rings);
    ComplexSignal scaled(k_max + 1);
    scaled[0] = sol.w0;
    double rk = 1.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
      rk *= r;
      scaled[k] = sol.coefficients.c[k] * rk;
    }
    ComplexSignal ring(spokes);
    if (spokes == n) {
      ComplexSignal bins(n, Complex{});
      for (std::size_t k = 0; k <= k_max; ++k) bins[k] = scaled[k] * static_cast<double>(n);
      ring = idft(bins);
    } else {
      for (std::size_t j = 0; j < spokes; ++j) {
        const Complex z = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(spokes));
        Complex acc = scaled[k_max];
        for (std::size_t k = k_max; k-- > 0;) acc = acc * z + scaled[k];
        ring[j] = acc;
      }
    }
    mesh.push_back(std::move(ring));
  }
  return mesh;
}

// Built-in shapes, parsed from "name:key=val,..." mini-specs:
//   circle:r=1,cx=0,cy=0          gamma = c + r e^{i tau}
//   ellipse:a=2,b=1               gamma = a cos tau + i b sin tau
//   perturbed:eps=0.25,k=2        gamma = e^{i tau} + eps e^{i k tau}
//   distorted:delta=0.4           gamma = e^{i(tau + delta sin tau)}
inline BoundaryCurve parse_shape(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<std::pair<std::string, double>> params;
  if (colon != std::string::npos) {
    std::size_t pos = colon + 1;
    while (pos < spec.size()) {
      auto comma = spec.find(',', pos);
      if (comma == std::string::npos) comma = spec.size();
      const std::string item = spec.substr(pos, comma - pos);
      const auto eq = item.find('=');
      require(eq != std::string::npos, "parse_shape: expected key=value in '" + item + "'");
      const std::string key = item.substr(0, eq);
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(item.substr(eq + 1), &used);
        require(used == item.size() - eq - 1 && std::isfinite(value), "");
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_shape: bad numeric value in '" + item + "'");
      }
      params.emplace_back(key, value);
      pos = comma + 1;
    }
  }
  auto get = [&params](const std::string& key, double fallback) {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return fallback;
  };
  auto known = [&params](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const char* key : keys) ok = ok || (k == key);
      require(ok, "parse_shape: unknown parameter '" + k + "'");
    }
  };

  if (name == "circle") {
    known({"r", "cx", "cy"});
    const double r = get("r", 1.0);
    const Complex c{get("cx", 0.0), get("cy", 0.0)};
    require(r > 0.0, "parse_shape: circle radius must be positive");
    return BoundaryCurve::from_function(
        [c, r](double tau) { return c + r * std::polar(1.0, tau); },
        [r](double tau) { return r * Complex(0.0, 1.0) * std::polar(1.0, tau); });
  }
  if (name == "ellipse") {
    known({"a", "b"});
    const double a = get("a", 2.0);
    const double b = get("b", 1.0);
    require(a > 0.0 && b > 0.0, "parse_shape: ellipse semi-axes must be positive");
    return BoundaryCurve::from_function(
        [a, b](double tau) { return Complex(a * std::cos(tau), b * std::sin(tau)); },
        [a, b](double tau) { return Complex(-a * std::sin(tau), b * std::cos(tau)); });
  }
  if (name == "perturbed") {
    known({"eps", "k"});
    const double eps = get("eps", 0.25);
    const double k = get("k", 2.0);
    require(std::abs(eps * k) < 1.0, "parse_shape: perturbed curve needs |eps*k| < 1");
    return BoundaryCurve::from_function(
        [eps, k](double tau) { return std::polar(1.0, tau) + eps * std::polar(1.0, k * tau); },
        [eps, k](double tau) {
          return Complex(0.0, 1.0) * (std::polar(1.0, tau) + eps * k * std::polar(1.0, k * tau));
        });
  }
  if (name == "distorted") {
    known({"delta"});
    const double delta = get("delta", 0.4);
    require(std::abs(delta) < 1.0, "parse_shape: distorted circle needs |delta| < 1");
    return BoundaryCurve::from_function(
        [delta](double tau) { return std::polar(1.0, tau + delta * std::sin(tau)); },
        [delta](double tau) {
          return Complex(0.0, 1.0) * (1.0 + delta * std::cos(tau)) *
                 std::polar(1.0, tau + delta * std::sin(tau));
        });
  }
  throw std::invalid_argument("parse_shape: unknown shape '" + name + "'");
}

}  // namespace harmonic
