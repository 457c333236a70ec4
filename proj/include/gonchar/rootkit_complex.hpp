// Certified complex zeros of squarefree integer polynomials.
//
// Stage one runs Aberth iteration in double precision from a jittered circle;
// stage two repeats Aberth steps in MPFR and certifies every approximation z
// with the Newton disk D(z, n |p(z)/p'(z)|), which always contains a zero.
// n pairwise disjoint disks therefore hold exactly one zero each.
#ifndef GONCHAR_ROOTKIT_COMPLEX_HPP
#define GONCHAR_ROOTKIT_COMPLEX_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gonchar/errors.hpp"
#include "gonchar/mp.hpp"
#include "gonchar/polycore.hpp"
#include "gonchar/zp.hpp"

namespace gonchar {

using ComplexMP = mp::Complex;

struct ZeroDisk {
  ComplexMP value;
  mp::Real radius;
  int index = 0;
};

struct ZeroSet {
  int d = 0;  // Gonchar dimension, 0 for a generic polynomial
  int degree = 0;
  std::vector<ZeroDisk> zeros;  // sorted by argument in (-pi, pi], then modulus
  mp::Bits working_precision = mp::kDefaultBits;
};

// p(z) and p'(z) in double precision; used only to seed the multiprecision stage.
using SeedEvaluator = std::function<std::pair<std::complex<double>, std::complex<double>>(std::complex<double>)>;

// Exact and float-free: gcd(p, p') is constant.
inline bool certify_all_simple(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("certify_all_simple of the zero polynomial");
  if (p.degree() < 1) return true;
  return exact_gcd(p, derivative(p)).degree() == 0;
}

namespace detail {

inline std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> r = 1.0;
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

// G(d;z) and G'(d;z) from the closed form; the expanded basis loses all
// digits in double precision once d reaches a few dozen.
inline SeedEvaluator gonchar_seed_evaluator(int d) {
  return [d](std::complex<double> z) {
    const std::complex<double> u = z - 1.0;
    const std::complex<double> ud1 = ipow(u, d - 1), ud = ud1 * u;
    const std::complex<double> zd2 = d >= 2 ? ipow(z, d - 2) : 0.0;
    const std::complex<double> zd1 = d >= 2 ? zd2 * z : 1.0;
    const std::complex<double> head = ud - z - 1.0;
    const std::complex<double> g = head * zd1 + ud;
    const std::complex<double> dg =
        static_cast<double>(d) * ud1 * zd1 + head * static_cast<double>(d - 1) * zd2 - zd1 + static_cast<double>(d) * ud1;
    return std::make_pair(g, dg);
  };
}

inline SeedEvaluator horner_seed_evaluator(const IntPoly& p) {
  std::vector<double> c;
  for (const auto& a : p.coeffs()) c.push_back(a.get_d());
  return [c = std::move(c)](std::complex<double> z) {
    std::complex<double> v = 0.0, dv = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      dv = dv * z + v;
      v = v * z + *it;
    }
    return std::make_pair(v, dv);
  };
}

inline std::vector<std::complex<double>> aberth_double(const IntPoly& p, const SeedEvaluator& eval) {
  const int n = p.degree();
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  // geometric-mean root radius |a0/an|^(1/n)
  double radius = 1.0;
  if (p.coeff(0) != 0) {
    long e0 = 0, en = 0;
    const double m0 = mpz_get_d_2exp(&e0, p.coeff(0).get_mpz_t());
    const double mn = mpz_get_d_2exp(&en, p.leading().get_mpz_t());
    const double l2 = std::log2(std::abs(m0)) + static_cast<double>(e0) - std::log2(std::abs(mn)) - static_cast<double>(en);
    radius = std::exp2(l2 / n);
  }
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  const double two_pi = 2 * std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    const double theta = two_pi * (k + 0.5 + jitter(rng)) / n + 0.3;
    z[static_cast<std::size_t>(k)] = std::polar(radius * (1.0 + 0.1 * jitter(rng)), theta);
  }
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int it = 0; it < 2000; ++it) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      auto [v, dv] = eval(z[ui]);
      if (v == 0.0) {
        done[ui] = true;
        continue;
      }
      std::complex<double> ratio = v / dv;
      // overflow far from the zeros: the leading term dominates, p/p' ~ z/n
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) ratio = z[ui] / static_cast<double>(n);
      std::complex<double> s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[ui] - z[static_cast<std::size_t>(j)]);
      }
      const std::complex<double> w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[ui] -= w;
      if (std::abs(w) <= 1e-14 * std::max(1.0, std::abs(z[ui]))) {
        done[ui] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

// Bits needed so that the Newton disk radius n |p/p'| can fall below tol:
// roughly log2(n * sum |a_k||z|^k / |p'(z)|) - log2(tol).
inline mp::Bits choose_precision(const IntPoly& p, const std::vector<std::complex<double>>& z, const SeedEvaluator& eval,
                                 const mp::Real& tol) {
  const int n = p.degree();
  double need = 0;
  for (const auto& zi : z) {
    const double lz = std::log2(std::max(std::abs(zi), 1e-300));
    double best = -1e300;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      const mpz_class& a = p.coeffs()[k];
      if (a == 0) continue;
      long e = 0;
      const double m = mpz_get_d_2exp(&e, a.get_mpz_t());
      best = std::max(best, std::log2(std::abs(m)) + static_cast<double>(e) + lz * static_cast<double>(k));
    }
    const double sum_bits = best + std::log2(static_cast<double>(n + 1));
    const double dp = std::abs(eval(zi).second);
    const double ldp = dp > 0 && std::isfinite(dp) ? std::log2(dp) : -64.0;
    need = std::max(need, sum_bits + std::log2(static_cast<double>(n)) - ldp);
  }
  need += static_cast<double>(-tol.exponent2()) + 40;
  mp::Bits prec = mp::kDefaultBits;
  while (static_cast<double>(prec) < need && prec < mp::kCeilingBits) prec *= 2;
  return prec;
}

struct MpWorkspace {
  explicit MpWorkspace(mp::Bits prec)
      : v(prec), dv(prec), s(prec), diff(prec), w(prec), t1(prec), t2(prec), t3(prec), one(1L, prec) {}
  ComplexMP v, dv, s, diff, w;
  mp::Real t1, t2, t3, one;
};

// v = p(z), dv = p'(z)
inline void horner_mp(const std::vector<mp::Real>& c, const ComplexMP& z, MpWorkspace& ws) {
  mpfr_set_zero(ws.v.re.get(), 1);
  mpfr_set_zero(ws.v.im.get(), 1);
  mpfr_set_zero(ws.dv.re.get(), 1);
  mpfr_set_zero(ws.dv.im.get(), 1);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    mp::inplace::mul(ws.dv, ws.dv, z, ws.t1, ws.t2);
    mpfr_add(ws.dv.re.get(), ws.dv.re.get(), ws.v.re.get(), MPFR_RNDN);
    mpfr_add(ws.dv.im.get(), ws.dv.im.get(), ws.v.im.get(), MPFR_RNDN);
    mp::inplace::horner_step(ws.v, z, *it, ws.t1, ws.t2);
  }
}

// One Gauss-Seidel Aberth sweep; returns max |correction| / max(1, |z|).
inline double aberth_sweep(const std::vector<mp::Real>& c, std::vector<ComplexMP>& z, MpWorkspace& ws) {
  const std::size_t n = z.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    horner_mp(c, z[i], ws);
    if (ws.v.re.is_zero() && ws.v.im.is_zero()) continue;
    // ratio = v / dv, stored in ws.w
    ws.w = ws.v / ws.dv;
    mpfr_set_zero(ws.s.re.get(), 1);
    mpfr_set_zero(ws.s.im.get(), 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mp::inplace::sub(ws.diff, z[i], z[j]);
      mp::inplace::add_reciprocal(ws.s, ws.diff, ws.t1, ws.t2);
    }
    // w = ratio / (1 - ratio * s)
    mp::inplace::mul(ws.s, ws.w, ws.s, ws.t1, ws.t2);
    mpfr_sub(ws.s.re.get(), ws.one.get(), ws.s.re.get(), MPFR_RNDN);
    mpfr_neg(ws.s.im.get(), ws.s.im.get(), MPFR_RNDN);
    ws.w = ws.w / ws.s;
    if (!ws.w.is_finite()) continue;
    mp::inplace::sub(z[i], z[i], ws.w);
    const double step = std::hypot(ws.w.re.to_double(), ws.w.im.to_double());
    const double mag = std::max(1.0, std::hypot(z[i].re.to_double(), z[i].im.to_double()));
    worst = std::max(worst, step / mag);
  }
  return worst;
}

// Certified Newton-disk radius n (|p| + e0) / (|p'| - e1), rounded upward;
// e0, e1 bound the Horner rounding error. Empty when |p'| is not resolved.
inline std::optional<mp::Real> newton_disk_radius(const IntPoly& p, const std::vector<mp::Real>& c,
                                                  const ComplexMP& z, MpWorkspace& ws) {
  const mp::Bits prec = z.precision();
  const long n = p.degree();
  horner_mp(c, z, ws);
  // s0 = sum |a_k||z|^k, s1 = sum k|a_k||z|^(k-1) by real Horner, upward
  mp::Real az = mp::abs(z.re) + mp::abs(z.im);  // >= |z|
  mp::Real s0(prec), s1(prec), a(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    mpfr_mul(s1.get(), s1.get(), az.get(), MPFR_RNDU);
    mpfr_add(s1.get(), s1.get(), s0.get(), MPFR_RNDU);
    mpfr_set_z(a.get(), it->get_mpz_t(), MPFR_RNDU);
    mpfr_abs(a.get(), a.get(), MPFR_RNDU);
    mpfr_mul(s0.get(), s0.get(), az.get(), MPFR_RNDU);
    mpfr_add(s0.get(), s0.get(), a.get(), MPFR_RNDU);
  }
  // gamma = 8 (n + 4) 2^-prec: complex Horner and coefficient rounding
  mp::Real gamma = mp::ldexp(mp::Real(8L * (n + 4), prec), -static_cast<long>(prec));
  mp::Real e0 = s0 * gamma, e1 = s1 * gamma;
  mp::Real num = mp::abs(ws.v) + e0;
  mp::Real den = mp::abs(ws.dv) - e1;
  if (!(den > 0.0)) return std::nullopt;
  mp::Real r(prec);
  mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
  mpfr_mul_si(r.get(), r.get(), n, MPFR_RNDU);
  // slack for the rounding inside abs and the quotient
  mp::Real slack = mp::ldexp(mp::Real(16L, prec), -static_cast<long>(prec));
  slack += 1L;
  mpfr_mul(r.get(), r.get(), slack.get(), MPFR_RNDU);
  return r;
}

inline bool disks_disjoint(const std::vector<ComplexMP>& z, const std::vector<mp::Real>& r) {
  const std::size_t n = z.size();
  // coarse filter in double, exact comparison only for close pairs
  std::vector<std::complex<double>> zd(n);
  double rmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    zd[i] = {z[i].re.to_double(), z[i].im.to_double()};
    rmax = std::max(rmax, r[i].to_double());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(zd[i] - zd[j]) > 4 * rmax + 1e-9) continue;
      mp::Real dist = mp::abs(z[i] - z[j]);
      mp::Real rs = r[i] + r[j];
      // dist carries relative rounding of a few ulps
      mp::Real guard = mp::ldexp(dist, -static_cast<long>(dist.precision()) + 4);
      if (!(dist - guard > rs)) return false;
    }
  }
  return true;
}

// Whether disks D(a, ra) and D(b, rb) intersect, with a small relative guard.
inline bool disks_meet(const ComplexMP& a, const mp::Real& ra, const ComplexMP& b, const mp::Real& rb) {
  mp::Real dist = mp::abs(a - b);
  mp::Real guard = mp::ldexp(dist, -static_cast<long>(dist.precision()) + 4);
  return dist - guard <= ra + rb;
}


// Real p with n disjoint certified disks: if D(Re c, r + |Im c|) meets no other disk it holds
// exactly one zero, which is then its own conjugate; projecting c onto the axis keeps it inside r.
inline void snap_real_zeros(std::vector<ComplexMP>& z, const std::vector<mp::Real>& r) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    const mp::Real im_abs = mp::abs(z[i].im);
    if (im_abs.is_zero() || im_abs > r[i]) continue;
    const ComplexMP centre(z[i].re, mp::Real(z[i].im.precision()));
    const mp::Real big = r[i] + im_abs;
    bool alone = true;
    for (std::size_t j = 0; j < z.size() && alone; ++j) {
      if (j != i && disks_meet(centre, big, z[j], r[j])) alone = false;
    }
    if (alone) z[i].im = mp::Real(z[i].im.precision());
  }
}

}  // namespace detail

// All complex zeros of a squarefree p, each in a certified disk of radius <= tol.
inline ZeroSet all_zeros(const IntPoly& p, const mp::Real& tol, const SeedEvaluator& seed = {},
                         mp::Bits ceiling = mp::kCeilingBits) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("all_zeros: polynomial of degree >= 1 required");
  if (!squarefree_fast(p)) throw PreconditionError("all_zeros: polynomial is not squarefree");
  if (!(tol > 0.0)) throw DomainError("all_zeros: tolerance must be positive");
  const int n = p.degree();
  const SeedEvaluator eval = seed ? seed : detail::horner_seed_evaluator(p);
  const std::vector<std::complex<double>> seeds = detail::aberth_double(p, eval);

  std::vector<ComplexMP> z;
  for (const auto& s : seeds) z.emplace_back(s.real(), s.imag(), mp::kDefaultBits);
  for (mp::Bits prec = detail::choose_precision(p, seeds, eval, tol); prec <= ceiling; prec *= 2) {
    for (auto& zi : z) zi.set_precision(prec);
    std::vector<mp::Real> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(a, prec);
    detail::MpWorkspace ws(prec);
    // stop once steps reach the rounding floor or stall
    const double floor_step = std::ldexp(1.0, -static_cast<int>(std::min<mp::Bits>(prec, 1000)) + 16);
    double prev = 1e300;
    for (int it = 0; it < 100; ++it) {
      const double step = detail::aberth_sweep(c, z, ws);
      if (step <= floor_step || (it >= 3 && step >= prev * 0.5)) break;
      prev = step;
    }
    std::vector<mp::Real> radii;
    radii.reserve(z.size());
    bool ok = true;
    for (const auto& zi : z) {
      auto r = detail::newton_disk_radius(p, c, zi, ws);
      if (!r || *r > tol) {
        ok = false;
        break;
      }
      radii.push_back(std::move(*r));
    }
    if (!ok || !detail::disks_disjoint(z, radii)) continue;
    detail::snap_real_zeros(z, radii);

    ZeroSet out;
    out.degree = n;
    out.working_precision = prec;
    for (std::size_t i = 0; i < z.size(); ++i) out.zeros.push_back(ZeroDisk{z[i], radii[i], 0});
    std::sort(out.zeros.begin(), out.zeros.end(), [](const ZeroDisk& a, const ZeroDisk& b) {
      const int c = mp::cmp(mp::arg(a.value), mp::arg(b.value));
      if (c != 0) return c < 0;
      return mp::norm(a.value) < mp::norm(b.value);
    });
    for (std::size_t i = 0; i < out.zeros.size(); ++i) out.zeros[i].index = static_cast<int>(i);
    return out;
  }
  throw NumericFailure("all_zeros: zero disks not certified below the precision ceiling");
}

inline ZeroSet gonchar_zeros(int d, const mp::Real& tol) {
  ZeroSet zs = all_zeros(gonchar_poly(d), tol, detail::gonchar_seed_evaluator(d));
  zs.d = d;
  return zs;
}


// Zero set invariant under z -> 1/z (even d), matched one to one.
inline bool inversion_closure_check(const ZeroSet& zs) {
  if (zs.d % 2 != 0) throw PreconditionError("inversion_closure_check: requires even d");
  const std::size_t n = zs.zeros.size();
  std::vector<bool> used(n, false);
  for (const auto& zi : zs.zeros) {
    const mp::Real m = mp::abs(zi.value);
    if (!(m > zi.radius)) return false;
    ComplexMP inv = ComplexMP(mp::Real(1L, m.precision()), mp::Real(m.precision())) / zi.value;
    // image of D(z, r) under inversion lies in D(1/z, r / (|z| (|z| - r)))
    mp::Real rinv = zi.radius / (m * (m - zi.radius));
    bool matched = false;
    for (std::size_t j = 0; j < n && !matched; ++j) {
      if (used[j]) continue;
      if (detail::disks_meet(inv, rinv, zs.zeros[j].value, zs.zeros[j].radius)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// Non-real zeros pair off under conjugation within certified radii.
inline bool conjugation_closure_check(const ZeroSet& zs) {
  const std::size_t n = zs.zeros.size();
  std::vector<bool> used(n, false);
  for (const auto& zi : zs.zeros) {
    const ComplexMP c = mp::conj(zi.value);
    bool matched = false;
    for (std::size_t j = 0; j < n && !matched; ++j) {
      if (used[j]) continue;
      if (detail::disks_meet(c, zi.radius, zs.zeros[j].value, zs.zeros[j].radius)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace gonchar

#endif  // GONCHAR_ROOTKIT_COMPLEX_HPP
