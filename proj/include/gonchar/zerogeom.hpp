// Region census of the zeros of G(d;z), unit-circle zeros via the theta
// equation, distance to the limit set Gamma, and the conjecture probes.
//
// Regions:  A1: Re z < 1/2, |z-1| > 1   A2: |z| < 1, |z-1| < 1
//           A3: Re z > 1/2, |z| > 1     OnC0: |z| = 1 (even d)
//           IntersectionPoint: z = (1 +- i sqrt3)/2 (6 | d)
#ifndef GONCHAR_ZEROGEOM_HPP
#define GONCHAR_ZEROGEOM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gonchar/errors.hpp"
#include "gonchar/mp.hpp"
#include "gonchar/polycore.hpp"
#include "gonchar/rootkit_complex.hpp"
#include "gonchar/rootkit_real.hpp"
#include "gonchar/zp.hpp"

namespace gonchar {

enum class Region { A1, A2, A3, OnC0, IntersectionPoint };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::A1:
      return "A1";
    case Region::A2:
      return "A2";
    case Region::A3:
      return "A3";
    case Region::OnC0:
      return "OnC0";
    case Region::IntersectionPoint:
      return "IntersectionPoint";
  }
  return "?";
}

inline std::optional<Region> region_from_string(const std::string& s) {
  for (Region r : {Region::A1, Region::A2, Region::A3, Region::OnC0, Region::IntersectionPoint}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

struct ThetaRoot {
  mp::Real value;
  mp::Real radius;
};

struct ThetaSolutionSet {
  int d = 0;
  std::vector<ThetaRoot> thetas;  // ascending in (0, pi], last one is pi
  // zeros on C0: e^{+-i theta}, theta = pi counted once
  int on_circle_count() const { return thetas.empty() ? 0 : 2 * static_cast<int>(thetas.size()) - 1; }
};

// 4 (floor((d-1)/6) + [6 | d]) + 1 for even d, 0 for odd d.
inline int expected_on_circle(int d) {
  if (d % 2 != 0) return 0;
  return 4 * ((d - 1) / 6 + (d % 6 == 0 ? 1 : 0)) + 1;
}

namespace detail {

struct ThetaEval {
  int d;
  mp::Bits prec;

  // h(t) = (-1)^(d/2) (2 sin(t/2))^d cos((d-1)t/2) - cos(t/2); G(d; e^{it}) = 2 e^{i(2d-1)t/2} h(t)
  mp::Real h(const mp::Real& t) const {
    mp::Real half = t / 2L;
    mp::Real s = mp::sin(half) * 2L;
    mp::Real v = mp::pow(s, static_cast<long>(d)) * mp::cos(t * static_cast<long>(d - 1) / 2L);
    if ((d / 2) % 2 != 0) v = -v;
    return v - mp::cos(half);
  }
  // g - f = h / (2 sin(t/2))^d, concave where g >= 0
  mp::Real g_minus_f(const mp::Real& t) const {
    mp::Real s = mp::sin(t / 2L) * 2L;
    return h(t) / mp::pow(s, static_cast<long>(d));
  }
  // rounding bound for h(t)
  mp::Real h_error(const mp::Real& t) const {
    mp::Real s = mp::abs(mp::sin(t / 2L) * 2L);
    mp::Real mag = mp::pow(s, static_cast<long>(d)) + 1L;
    return mp::ldexp(mag * static_cast<long>(d + 4), -static_cast<long>(prec) + 6);
  }
  // certified sign of h at t, 0 when rounding hides it
  int sign(const mp::Real& t) const {
    mp::Real v = h(t);
    if (mp::abs(v) <= h_error(t)) return 0;
    return v.sign();
  }
};

struct NeedMorePrecision {};

// Root of h in (a, b) with sign(h(a)) = sa != sign(h(b)), bisected to width <= 2 tol.
inline ThetaRoot bisect_theta(const ThetaEval& ev, mp::Real a, mp::Real b, int sa, const mp::Real& tol) {
  const mp::Real two_tol = tol * 2L;
  while (b - a > two_tol) {
    mp::Real w = b - a;
    mp::Real mid = (a + b) / 2L;
    int s = ev.sign(mid);
    if (s == 0) {
      // trisection points around an unresolved midpoint
      mp::Real l = a + w / 3L, r = b - w / 3L;
      int sl = ev.sign(l), sr = ev.sign(r);
      if (sl != 0 && sl != sa) {
        b = l;
      } else if (sl == sa) {
        if (sr != 0 && sr != sa) {
          a = l;
          b = r;
        } else if (sr == sa) {
          a = r;
        } else {
          throw NeedMorePrecision{};
        }
      } else {
        throw NeedMorePrecision{};
      }
      continue;
    }
    if (s == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  mp::Real rad = (b - a) / 2L;
  mpfr_nextabove(rad.get());
  return ThetaRoot{(a + b) / 2L, rad};
}

inline ThetaSolutionSet theta_solutions_at(int d, const mp::Real& tol, mp::Bits prec) {
  const ThetaEval ev{d, prec};
  const mp::Real pi = mp::pi(prec);
  const mp::Real sqrt3 = mp::sqrt(mp::Real(3L, prec));
  // alpha = (4 - 2 sqrt3) / (3d + 1)
  const mp::Real alpha = (mp::Real(4L, prec) - sqrt3 * 2L) / static_cast<long>(3 * d + 1);
  const mp::Real lo = pi / 3L - alpha;
  {
    // no solutions in (0, lo]: (2 sin(t/2))^d increases and cos(t/2) decreases there
    mp::Real s = mp::sin(lo / 2L) * 2L;
    mp::Real lhs = mp::pow(s, static_cast<long>(d)) + ev.h_error(lo);
    mp::Real rhs = mp::cos(lo / 2L) - ev.h_error(lo);
    if (!(s < 1.0) || !(lhs < rhs)) throw std::logic_error("theta_solutions: lower cut-off certificate failed");
  }
  ThetaSolutionSet out;
  out.d = d;
  // half-periods of cos((d-1)t/2) between its zeros (2k+1) pi / (d-1); on
  // interval k the sign of g is (-1)^(d/2) (-1)^k
  const int m = (d - 2) / 2;  // the last zero is at pi
  const int g_sign0 = (d / 2) % 2 == 0 ? 1 : -1;
  for (int k = 0; k <= m; ++k) {
    if (((k % 2 == 0) ? g_sign0 : -g_sign0) < 0) continue;
    mp::Real a = k == 0 ? mp::Real(0L, prec) : pi * static_cast<long>(2 * k - 1) / static_cast<long>(d - 1);
    mp::Real b = pi * static_cast<long>(2 * k + 1) / static_cast<long>(d - 1);
    if (b <= lo) continue;
    if (a < lo) a = lo;
    const bool ends_at_pi = k == m;
    // golden-section search for the maximum of the concave g - f
    const mp::Real invphi = (mp::sqrt(mp::Real(5L, prec)) - 1L) / 2L;
    mp::Real x0 = a, x3 = b;
    mp::Real x1 = x3 - (x3 - x0) * invphi, x2 = x0 + (x3 - x0) * invphi;
    mp::Real f1 = ev.g_minus_f(x1), f2 = ev.g_minus_f(x2);
    const mp::Real stop = mp::ldexp(b - a, -40);
    while (x3 - x0 > stop) {
      if (f1 < f2) {
        x0 = x1;
        x1 = x2;
        f1 = f2;
        x2 = x0 + (x3 - x0) * invphi;
        f2 = ev.g_minus_f(x2);
      } else {
        x3 = x2;
        x2 = x1;
        f2 = f1;
        x1 = x3 - (x3 - x0) * invphi;
        f1 = ev.g_minus_f(x1);
      }
    }
    const mp::Real top = f1 < f2 ? x2 : x1;
    const int st = ev.sign(top);
    if (st == 0) throw NeedMorePrecision{};
    if (st < 0) continue;
    // h < 0 at a (g = 0 < f there, or a = lo) and h > 0 at top
    out.thetas.push_back(bisect_theta(ev, a, top, -1, tol));
    if (!ends_at_pi) out.thetas.push_back(bisect_theta(ev, top, b, 1, tol));
  }
  out.thetas.push_back(ThetaRoot{pi, mp::Real(prec)});
  // pi is exact but its MPFR value is rounded: cover it with one ulp
  mpfr_set_ui_2exp(out.thetas.back().radius.get(), 1, static_cast<mpfr_exp_t>(pi.exponent2() - static_cast<long>(prec) + 1),
                   MPFR_RNDU);
  return out;
}

}  // namespace detail

// All solutions in (0, pi] of the theta equation for even d, certified to tol.
inline ThetaSolutionSet theta_solutions(int d, const mp::Real& tol, mp::Bits ceiling = mp::kCeilingBits) {
  if (d < 2 || d % 2 != 0) throw PreconditionError("theta_solutions: d must be even and >= 2");
  mp::Bits prec = mp::kDefaultBits;
  while (static_cast<double>(prec) < static_cast<double>(-tol.exponent2()) + 48 && prec < ceiling) prec *= 2;
  for (; prec <= ceiling; prec *= 2) {
    try {
      ThetaSolutionSet s = detail::theta_solutions_at(d, tol, prec);
      if (s.on_circle_count() != expected_on_circle(d))
        throw std::logic_error("theta_solutions: solution count " + std::to_string(s.on_circle_count()) +
                               " differs from the closed-form count for d = " + std::to_string(d));
      return s;
    } catch (const detail::NeedMorePrecision&) {
    }
  }
  throw NumericFailure("theta_solutions: signs unresolved below the precision ceiling");
}

// Odd d: G and its reciprocal share no zero, so no zero lies on |z| = 1
// (a unimodular zero z of a real polynomial has 1/z = conj z as a zero too).
inline bool unit_circle_free_certificate(int d) {
  const IntPoly g = gonchar_poly(d);
  return coprime_fast(g, reciprocal(g));
}

namespace detail {

inline ComplexMP intersection_point(bool upper, mp::Bits prec) {
  mp::Real h = mp::sqrt(mp::Real(3L, prec)) / 2L;
  return ComplexMP(mp::Real("0.5", prec), upper ? h : -h);
}

inline bool theta_disk_meets(const ZeroDisk& z, const ThetaRoot& t, bool upper) {
  const mp::Bits prec = z.value.precision();
  mp::Real th = t.value;
  th.set_precision(std::max(prec, th.precision()));
  if (!upper) th = -th;
  ComplexMP e = mp::polar(mp::Real(1L, th.precision()), th);
  // |e^{ia} - e^{ib}| <= |a - b|, plus rounding of the exponential
  mp::Real slack = t.radius + mp::ldexp(mp::Real(4L, prec), -static_cast<long>(prec));
  return disks_meet(z.value, z.radius, e, slack);
}

}  // namespace detail

// Region of a certified zero. Throws UnresolvedClassification when the disk
// straddles a boundary.
inline Region classify(const ZeroDisk& z, int d, const ThetaSolutionSet* theta_ref = nullptr) {
  const mp::Bits prec = z.value.precision();
  if (d % 6 == 0) {
    for (bool upper : {true, false}) {
      if (detail::disks_meet(z.value, z.radius, detail::intersection_point(upper, prec),
                             mp::ldexp(mp::Real(4L, prec), -static_cast<long>(prec))))
        return Region::IntersectionPoint;
    }
  }
  if (d % 2 == 0 && theta_ref != nullptr) {
    for (const auto& t : theta_ref->thetas) {
      if (detail::theta_disk_meets(z, t, true) || detail::theta_disk_meets(z, t, false)) return Region::OnC0;
    }
  }
  const mp::Real& r = z.radius;
  const mp::Real re = z.value.re;
  const mp::Real m0 = mp::abs(z.value);
  const mp::Real m1 = mp::abs(ComplexMP(re - 1L, z.value.im));
  // rounding of the moduli, a few ulps
  const mp::Real slack = r + mp::ldexp(mp::Real(8L, prec), -static_cast<long>(prec));
  const double half = 0.5;
  if (re + slack < half && m1 - slack > 1.0) return Region::A1;
  if (m0 + slack < 1.0 && m1 + slack < 1.0) return Region::A2;
  if (re - slack > half && m0 - slack > 1.0) return Region::A3;
  throw UnresolvedClassification("zero disk at " + mp::to_decimal(re, 20) + " + " + mp::to_decimal(z.value.im, 20) +
                                 "i straddles a region boundary");
}

struct Census {
  int d = 0;
  int N1 = 0;
  int N2 = 0;
  int N3 = 0;
  int on_circle = 0;
  bool has_intersection_pair = false;
  int n() const { return 2 * d - 1; }
};

struct ClassifiedZeros {
  ZeroSet zeros;
  std::vector<Region> regions;  // parallel to zeros.zeros
  std::optional<ThetaSolutionSet> theta;
};

// Zeros of G(d;z) with regions; retries at tighter tolerance while any disk straddles a boundary.
inline ClassifiedZeros classify_zeros(int d, const mp::Real& tol) {
  if (d < 1) throw DomainError("classify_zeros: d must be >= 1");
  ClassifiedZeros out;
  if (d % 2 == 0) {
    out.theta = theta_solutions(d, tol);
  } else if (!unit_circle_free_certificate(d)) {
    throw std::logic_error("classify_zeros: G and its reciprocal share a factor for odd d");
  }
  mp::Real t = tol;
  for (int attempt = 0; attempt < 4; ++attempt) {
    out.zeros = gonchar_zeros(d, t);
    out.regions.clear();
    try {
      for (const auto& z : out.zeros.zeros) {
        out.regions.push_back(classify(z, d, out.theta ? &*out.theta : nullptr));
      }
    } catch (const UnresolvedClassification&) {
      if (attempt == 3) throw;
      t = mp::ldexp(t, -64);
      continue;
    }
    break;
  }
  if (out.theta) {
    // every e^{+-i theta} lies in exactly one disk
    for (const auto& th : out.theta->thetas) {
      for (bool upper : {true, false}) {
        int hits = 0;
        for (const auto& z : out.zeros.zeros) hits += detail::theta_disk_meets(z, th, upper) ? 1 : 0;
        if (hits != 1) throw std::logic_error("classify_zeros: theta solution not matched to exactly one zero disk");
      }
    }
  }
  return out;
}

inline Census census_of(const ClassifiedZeros& cz) {
  Census c;
  c.d = cz.zeros.d;
  int inter = 0;
  for (Region r : cz.regions) {
    switch (r) {
      case Region::A1:
        ++c.N1;
        break;
      case Region::OnC0:
        ++c.N1;
        ++c.on_circle;
        break;
      case Region::A2:
        ++c.N2;
        break;
      case Region::A3:
        ++c.N3;
        break;
      case Region::IntersectionPoint:
        ++inter;
        ++c.on_circle;
        break;
    }
  }
  c.has_intersection_pair = inter == 2;
  return c;
}

inline Census census(int d, const mp::Real& tol) { return census_of(classify_zeros(d, tol)); }

// Euclidean distance from z to Gamma: the boundary of D(0,1) u D(1,1) and the
// segment Re z = 1/2, |Im z| <= sqrt3/2.
inline mp::Real gamma_distance(const ComplexMP& z) {
  const mp::Bits prec = z.precision();
  const mp::Real pi = mp::pi(prec);
  const mp::Real h = mp::sqrt(mp::Real(3L, prec)) / 2L;
  const mp::Real half("0.5", prec);
  auto to_corner = [&](const ComplexMP& w) {
    mp::Real dy = mp::abs(w.im) - h;
    return mp::hypot(w.re - half, dy);
  };
  // arc of C0 with |arg| >= pi/3
  mp::Real d0(prec);
  if (z.re.is_zero() && z.im.is_zero()) {
    d0 = mp::Real(1L, prec);
  } else if (mp::abs(mp::arg(z)) >= pi / 3L) {
    d0 = mp::abs(mp::abs(z) - 1L);
  } else {
    d0 = to_corner(z);
  }
  // arc of C1 with |arg(z-1)| <= 2pi/3
  const ComplexMP w(z.re - 1L, z.im);
  mp::Real d1(prec);
  if (w.re.is_zero() && w.im.is_zero()) {
    d1 = mp::Real(1L, prec);
  } else if (mp::abs(mp::arg(w)) <= pi * 2L / 3L) {
    d1 = mp::abs(mp::abs(w) - 1L);
  } else {
    d1 = to_corner(z);
  }
  // segment
  mp::Real ds = mp::abs(z.im) <= h ? mp::abs(z.re - half) : to_corner(z);
  return mp::min(d0, mp::min(d1, ds));
}

// max over the zeros of gamma_distance + certified radius
inline mp::Real max_gamma_distance(int d, const mp::Real& tol) {
  ZeroSet zs = gonchar_zeros(d, tol);
  mp::Real best(zs.working_precision);
  for (const auto& z : zs.zeros) best = mp::max(best, gamma_distance(z.value) + z.radius);
  return best;
}

struct ProbeReport {
  int d = 0;
  bool classified = false;  // every zero in exactly one region
  std::string failure;      // reason when classified is false
  Census census;
  std::optional<bool> alternation;  // odd d only: upper-half A1 zeros by argument alternate in/out of C0
  bool a3_outside_c1 = false;       // |z-1| > 1 for every A3 zero
  bool a2_convex = false;           // consistent turning sign along the Im-sorted A2 chain
};

inline ProbeReport conjecture_probes(int d, const mp::Real& tol) {
  ProbeReport rep;
  rep.d = d;
  ClassifiedZeros cz;
  try {
    cz = classify_zeros(d, tol);
  } catch (const UnresolvedClassification& e) {
    rep.failure = e.what();
    return rep;
  }
  rep.classified = true;
  rep.census = census_of(cz);
  std::vector<const ZeroDisk*> a1_upper, a2;
  rep.a3_outside_c1 = true;
  for (std::size_t i = 0; i < cz.regions.size(); ++i) {
    const ZeroDisk& z = cz.zeros.zeros[i];
    if (cz.regions[i] == Region::A1 && z.value.im > 0.0) a1_upper.push_back(&z);
    if (cz.regions[i] == Region::A2) a2.push_back(&z);
    if (cz.regions[i] == Region::A3) {
      mp::Real m1 = mp::abs(ComplexMP(z.value.re - 1L, z.value.im));
      if (!(m1 - z.radius > 1.0)) rep.a3_outside_c1 = false;
    }
  }
  if (d % 2 != 0) {
    // zeros are sorted by argument already
    bool alt = true;
    int prev = 0;
    for (const ZeroDisk* z : a1_upper) {
      mp::Real m = mp::abs(z->value);
      int side = m + z->radius < 1.0 ? -1 : (m - z->radius > 1.0 ? 1 : 0);
      if (side == 0 || side == prev) alt = false;
      prev = side;
    }
    rep.alternation = alt;
  }
  std::sort(a2.begin(), a2.end(), [](const ZeroDisk* a, const ZeroDisk* b) { return a->value.im < b->value.im; });
  int turn = 0;
  bool convex = true;
  for (std::size_t i = 2; i < a2.size(); ++i) {
    const ComplexMP u = a2[i - 1]->value - a2[i - 2]->value;
    const ComplexMP v = a2[i]->value - a2[i - 1]->value;
    const int s = (u.re * v.im - u.im * v.re).sign();
    if (s == 0) continue;
    if (turn == 0) turn = s;
    if (s != turn) convex = false;
  }
  rep.a2_convex = convex;
  return rep;
}

// (d-1) Q(d;z) = (d-1) z^{d+1} + c z^d + c z + (d-1) with c = d+1 (or d-3 for the variant).
inline IntPoly q_aux_poly(int d, bool variant = false) {
  if (d < 3) throw DomainError("q_aux_poly: d must be >= 3");
  const long c = variant ? d - 3 : d + 1;
  std::vector<mpz_class> v(static_cast<std::size_t>(d) + 2, 0);
  v[0] = d - 1;
  v[1] += c;
  v[static_cast<std::size_t>(d)] += c;
  v[static_cast<std::size_t>(d) + 1] = d - 1;
  return IntPoly(std::move(v));
}

// H with z^{-m} P(z) = H(z + 1/z) for a palindromic P of degree 2m.
inline IntPoly palindromic_trace_poly(const IntPoly& p) {
  const int n = p.degree();
  if (n % 2 != 0 || reciprocal(p) != p) throw PreconditionError("palindromic_trace_poly: palindromic even degree required");
  const int m = n / 2;
  // Dickson polynomials D_k(x) = z^k + z^-k
  IntPoly dk_prev{2}, dk{0, 1};
  IntPoly h(std::vector<mpz_class>{p.coeff(static_cast<std::size_t>(m))});
  for (int k = 1; k <= m; ++k) {
    h += dk * p.coeff(static_cast<std::size_t>(m + k));
    IntPoly next = IntPoly{0, 1} * dk - dk_prev;
    dk_prev = std::move(dk);
    dk = std::move(next);
  }
  return h;
}

struct QStructureReport {
  int d = 0;
  bool real_structure = false;  // even: triple zero at -1 only; odd: exactly two real zeros, both negative
  int unit_circle_zeros = 0;    // certified count on |z| = 1 apart from -1
  int expected_unit_circle = 0;
  int tan_solutions = 0;  // tan(phi/2) tan(d phi/2) = -d in (0, 2pi) \ {pi}
  int expected_tan = 0;
  bool variant_all_on_circle = false;
  bool ok() const {
    return real_structure && unit_circle_zeros == expected_unit_circle && tan_solutions == expected_tan &&
           variant_all_on_circle;
  }
};

namespace detail {

// Distinct zeros on |z| = 1 of a palindromic even-degree p, excluding z = +-1.
inline int unit_circle_count(const IntPoly& p) {
  const IntPoly h = palindromic_trace_poly(p);
  const SturmSequence s(h);
  int n = s.count(RatQ(-2), RatQ(2));
  if (sign_at(h, RatQ(2)) == 0) --n;
  return 2 * n;
}

// All zeros of a palindromic p on |z| = 1, multiplicities included.
inline bool all_on_unit_circle(IntPoly p) {
  const IntPoly zp1{1, 1};
  while (p.degree() > 0 && sign_at(p, RatQ(-1)) == 0) p = divide_exact(p, zp1);
  if (p.degree() == 0) return true;
  if (p.degree() % 2 != 0) return false;
  const IntPoly h = palindromic_trace_poly(p);
  const SturmSequence s(h);
  const int distinct = s.squarefree().degree();
  return s.count_all() == distinct && s.count(RatQ(-2), RatQ(2)) + (sign_at(h, RatQ(-2)) == 0 ? 1 : 0) == distinct;
}

inline int tan_equation_count(int d) {
  auto f = [d](double p) {
    return std::sin(p / 2) * std::sin(d * p / 2) + d * std::cos(p / 2) * std::cos(d * p / 2);
  };
  const double pi = std::numbers::pi;
  const double eps = pi / (64.0 * d);
  const int n = 256 * d;
  int count = 0;
  for (auto [a, b] : {std::pair{0.0, pi - eps}, std::pair{pi + eps, 2 * pi}}) {
    double prev = f(a);
    for (int i = 1; i <= n; ++i) {
      const double x = a + (b - a) * i / n;
      const double v = f(x);
      if ((prev < 0) != (v < 0)) ++count;
      prev = v;
    }
  }
  return count;
}

}  // namespace detail

inline QStructureReport q_structure_check(int d) {
  if (d < 3) throw DomainError("q_structure_check: d must be >= 3");
  QStructureReport rep;
  rep.d = d;
  const IntPoly q = q_aux_poly(d);
  const IntPoly zp1{1, 1};
  if (d % 2 == 0) {
    const IntPoly cube = zp1 * zp1 * zp1;
    rep.expected_unit_circle = d - 2;
    rep.expected_tan = d - 2;
    if (divides(cube, q)) {
      const IntPoly rest = divide_exact(q, cube);
      rep.real_structure = sign_at(rest, RatQ(-1)) != 0 && SturmSequence(rest).count_all() == 0;
      rep.unit_circle_zeros = detail::unit_circle_count(rest);
    }
  } else {
    rep.expected_unit_circle = d - 1;
    rep.expected_tan = d - 1;
    const SturmSequence s(q);
    const RatQ b(cauchy_bound(q));
    rep.real_structure = certify_all_simple(q) && s.count_all() == 2 && s.count(-b, RatQ(0)) == 2 &&
                         sign_at(q, RatQ(0)) != 0 && sign_at(q, RatQ(-1)) != 0;
    rep.unit_circle_zeros = detail::unit_circle_count(q);
  }
  rep.tan_solutions = detail::tan_equation_count(d);
  rep.variant_all_on_circle = detail::all_on_unit_circle(q_aux_poly(d, true));
  return rep;
}

}  // namespace gonchar

#endif  // GONCHAR_ZEROGEOM_HPP
