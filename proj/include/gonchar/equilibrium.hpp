// Signed equilibrium of a sphere in the field of a point charge, reduced to the polar angle.
#ifndef GONCHAR_EQUILIBRIUM_HPP
#define GONCHAR_EQUILIBRIUM_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gonchar/errors.hpp"

namespace gonchar {

inline double uniform_potential(double r, int d) {
  if (!(r >= 0.0) || d < 1) throw DomainError("uniform_potential: r >= 0 and d >= 1 required");
  return r <= 1.0 ? 1.0 : std::pow(r, 1.0 - d);
}

namespace detail {

inline void check_field(double R, double q, int d) {
  if (!(R > 1.0)) throw DomainError("equilibrium: R > 1 required");
  if (!(q > 0.0)) throw DomainError("equilibrium: q > 0 required");
  if (d < 1) throw DomainError("equilibrium: d >= 1 required");
}

// squared distance from the point at polar angle t to R p
inline double dist2(double t, double R) { return 1.0 - 2.0 * R * std::cos(t) + R * R; }

// normalized weight of the polar-angle marginal of sigma_d
inline double weight_constant(int d) {
  return std::exp(std::lgamma((d + 1) / 2.0) - std::lgamma(d / 2.0)) / std::sqrt(std::numbers::pi);
}

// Breakpoints resolving the spike of width about R - 1 at the pole.
inline std::vector<double> polar_breakpoints(double a, double b, double R) {
  std::vector<double> pts{a};
  for (double s = R - 1.0; s < b; s *= 4.0) {
    if (s > a) pts.push_back(s);
  }
  pts.push_back(b);
  return pts;
}

// Error estimate: discrepancy between 31- and 61-point adaptive Kronrod runs. The
// error reported by the adaptive driver itself is not scaled per subinterval.
template <class F>
double integrate_polar(F f, double a, double b, double R, double quad_tol, const char* what) {
  using boost::math::quadrature::gauss_kronrod;
  double sum = 0.0, check = 0.0, l1_total = 0.0;
  const auto pts = polar_breakpoints(a, b, R);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double l1 = 0.0;
    sum += gauss_kronrod<double, 61>::integrate(f, pts[i], pts[i + 1], 10, 1e-14, nullptr, &l1);
    check += gauss_kronrod<double, 31>::integrate(f, pts[i], pts[i + 1], 10, 1e-14);
    l1_total += l1;
  }
  // quad_tol is relative to the L1 norm of the integrand, which dominates near R = 1
  if (!std::isfinite(sum) || std::abs(sum - check) > quad_tol * std::max(1.0, l1_total)) {
    throw NumericFailure(std::string(what) + ": quadrature did not reach the requested tolerance");
  }
  return sum;
}

}  // namespace detail

// eta'(t) = 1 + q/R^(d-1) - q (R^2 - 1) / |x - a|^(d+1)
inline double density(double t, double R, double q, int d) {
  detail::check_field(R, q, d);
  return 1.0 + q / std::pow(R, d - 1) - q * (R * R - 1.0) / std::pow(detail::dist2(t, R), (d + 1) / 2.0);
}

inline double polar_weight(double t, int d) {
  return detail::weight_constant(d) * std::pow(std::sin(t), d - 1);
}

inline double total_mass(double R, double q, int d, double quad_tol = 1e-12) {
  detail::check_field(R, q, d);
  const double c = detail::weight_constant(d);
  auto f = [&](double t) { return density(t, R, q, d) * c * std::pow(std::sin(t), d - 1); };
  return detail::integrate_polar(f, 0.0, std::numbers::pi, R, quad_tol, "total_mass");
}

struct DensityProfile {
  int d = 0;
  double R = 0.0, q = 0.0;
  std::vector<std::pair<double, double>> samples;  // (t, eta'(t)), t ascending on [0, pi]

  bool nondecreasing() const {
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (samples[i].second < samples[i - 1].second) return false;
    }
    return true;
  }
};

inline DensityProfile density_profile(double R, double q, int d, int n = 1000) {
  detail::check_field(R, q, d);
  if (n < 2) throw DomainError("density_profile: at least two samples required");
  DensityProfile p{d, R, q, {}};
  p.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = std::numbers::pi * i / (n - 1);
    p.samples.emplace_back(t, density(t, R, q, d));
  }
  return p;
}

struct CapReport {
  double t0 = 0.0;
  double positive_mass = 1.0;
  std::optional<double> t0_closed_form;  // d = 2 only
};

// d = 2: s^3 = q (R^2 - 1) / (1 + q/R) is the distance |x - a| on the cap boundary.
inline double cap_angle_closed_form_d2(double R, double q) {
  const double s = std::cbrt(q * (R * R - 1.0) / (1.0 + q / R));
  const double c = (1.0 + R * R - s * s) / (2.0 * R);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

inline CapReport positive_cap(double R, double q, int d, double tol = 1e-14) {
  detail::check_field(R, q, d);
  CapReport rep;
  if (density(0.0, R, q, d) >= 0.0) return rep;
  auto f = [&](double t) { return density(t, R, q, d); };
  std::uintmax_t iters = 200;
  auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, std::numbers::pi, stop, iters);
  if (iters >= 200) throw NumericFailure("positive_cap: root bracketing did not converge");
  rep.t0 = 0.5 * (lo + hi);
  if (d == 2) {
    rep.t0_closed_form = cap_angle_closed_form_d2(R, q);
    if (std::abs(*rep.t0_closed_form - rep.t0) > 1e-9) {
      throw std::logic_error("positive_cap: bracketed root disagrees with the d = 2 closed form");
    }
  }
  const double c = detail::weight_constant(d);
  auto g = [&](double t) { return density(t, R, q, d) * c * std::pow(std::sin(t), d - 1); };
  rep.positive_mass = detail::integrate_polar(g, rep.t0, std::numbers::pi, R, 1e-11, "positive_cap");
  return rep;
}

namespace detail {

// V^eta(x) for d = 2 in geodesic polar coordinates (psi, phi) centred at x:
// dsigma = sin(psi) dpsi dphi / (4 pi) and |x - y| = 2 sin(psi/2), so the kernel
// times the area element is cos(psi/2), which is bounded.
template <unsigned N>
double potential_d2_rule(double t, double R, double q) {
  using boost::math::quadrature::gauss_kronrod;
  const double ct = std::cos(t), st = std::sin(t);
  auto outer = [&](double psi) {
    const double cp = std::cos(psi), sp = std::sin(psi);
    auto inner = [&](double phi) {
      const double cy = std::clamp(ct * cp + st * sp * std::cos(phi), -1.0, 1.0);
      return density(std::acos(cy), R, q, 2);
    };
    return gauss_kronrod<double, N>::integrate(inner, 0.0, std::numbers::pi, 10, 1e-13) * std::cos(psi / 2.0);
  };
  // phi symmetric about the meridian: 2 * int_0^pi, then divided by 4 pi
  return gauss_kronrod<double, N>::integrate(outer, 0.0, std::numbers::pi, 10, 1e-13) / (2.0 * std::numbers::pi);
}

}  // namespace detail

inline double weighted_potential_d2(double t, double R, double q, double quad_tol = 1e-12) {
  detail::check_field(R, q, 2);
  const double v = detail::potential_d2_rule<61>(t, R, q);
  const double check = detail::potential_d2_rule<31>(t, R, q);
  if (!std::isfinite(v) || std::abs(v - check) > quad_tol * std::max(1.0, std::abs(v))) {
    throw NumericFailure("weighted_potential_d2: quadrature did not reach the requested tolerance");
  }
  return v;
}

inline double weighted_potential_residual(double R, double q, std::span<const double> points,
                                          double quad_tol = 1e-12) {
  detail::check_field(R, q, 2);
  const double target = 1.0 + q / R;
  double worst = 0.0;
  for (double t : points) {
    if (!(t >= 0.0 && t <= std::numbers::pi)) throw DomainError("weighted_potential_residual: t must lie in [0, pi]");
    const double v = weighted_potential_d2(t, R, q, quad_tol) + q / std::sqrt(detail::dist2(t, R));
    worst = std::max(worst, std::abs(v - target));
  }
  return worst;
}

struct CdForms {
  double gamma_form = 0.0;  // pi^((d+3)/2) Gamma((d-1)/2) / Gamma(d/2)^2
  double omega_form = 0.0;  // omega_d pi / (d-1) [Gamma((d+1)/2) / Gamma(d/2)]^2
};

inline CdForms c_d_forms(int d) {
  if (d < 2 || d > 150) throw DomainError("c_d: 2 <= d <= 150 required");
  const double pi = std::numbers::pi;
  const double h = d / 2.0;
  CdForms f;
  f.gamma_form = std::pow(pi, (d + 3) / 2.0) * std::tgamma((d - 1) / 2.0) / (std::tgamma(h) * std::tgamma(h));
  const double omega = 2.0 * std::pow(pi, (d + 1) / 2.0) / std::tgamma((d + 1) / 2.0);
  const double ratio = std::tgamma((d + 1) / 2.0) / std::tgamma(h);
  f.omega_form = omega * pi / (d - 1) * ratio * ratio;
  return f;
}

inline double c_d(int d) {
  const CdForms f = c_d_forms(d);
  if (std::abs(f.gamma_form - f.omega_form) > 1e-12 * std::abs(f.gamma_form)) {
    throw std::logic_error("c_d: closed forms disagree for d = " + std::to_string(d));
  }
  return f.gamma_form;
}

}  // namespace gonchar

#endif  // GONCHAR_EQUILIBRIUM_HPP
