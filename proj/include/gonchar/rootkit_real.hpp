// Certified real roots of integer polynomials and the critical distance R_q.
//
// Counting and isolation are exact (Sturm sequences over Z, signs at rational
// points). Refinement runs Newton in MPFR and certifies each approximation by
// exact sign evaluation at the rational endpoints value -/+ radius.
#ifndef GONCHAR_ROOTKIT_REAL_HPP
#define GONCHAR_ROOTKIT_REAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gonchar/errors.hpp"
#include "gonchar/mp.hpp"
#include "gonchar/polycore.hpp"

namespace gonchar {

// Open interval (lo, hi) with exact rational endpoints.
struct Interval {
  RatQ lo;
  RatQ hi;
};

struct RootApprox {
  mp::Real value;
  mp::Real radius;  // the root lies in [value - radius, value + radius]
  mp::Bits working_precision = mp::kDefaultBits;
  std::optional<RatQ> exact;  // set when the root is a known rational

  static RootApprox from_exact(const RatQ& x, mp::Bits prec) {
    return RootApprox{mp::Real(x, prec), mp::Real(prec), prec, x};
  }
};

// Sturm sequence of the squarefree part of p, built from the subresultant PRS
// with the sign of each scalar multiplier tracked so that element i equals a
// positive multiple of the classical sequence S_{i+1} = -rem(S_{i-1}, S_i).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    IntPoly base = primitive_normalized(p);
    build(base);
    if (seq_.back().degree() > 0) {
      // not squarefree: restart from p / gcd(p, p')
      IntPoly g = primitive_normalized(seq_.back());
      base = primitive_normalized(divide_exact(base, g));
      seq_.clear();
      build(base);
    }
  }

  const IntPoly& squarefree() const { return seq_.front(); }
  std::span<const IntPoly> elements() const { return seq_; }

  int variations_at(const RatQ& x) const {
    int v = 0, prev = 0;
    for (const auto& s : seq_) {
      int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }
  int variations_at_infinity(bool positive) const {
    int v = 0, prev = 0;
    for (const auto& s : seq_) {
      int sg = sign_at_infinity(s, positive);
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }

  // Distinct real roots in (a, b]. Valid when a or b is itself a root: the
  // variation count at a root equals the count just to its right.
  int count(const RatQ& a, const RatQ& b) const {
    if (!(a < b)) return 0;
    return variations_at(a) - variations_at(b);
  }
  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  void build(const IntPoly& base) {
    if (base.degree() < 1) {
      seq_ = {base};
      return;
    }
    auto prs = subresultant_prs(base, derivative(base));
    std::vector<int> sgn_c(prs.seq.size(), 1);
    for (std::size_t i = 1; i + 1 < prs.seq.size(); ++i) {
      const int delta = prs.seq[i - 1].degree() - prs.seq[i].degree();
      int s = -sgn_c[i - 1] * sgn(prs.beta[i - 1]);
      if (sgn(prs.seq[i].leading()) < 0 && (delta + 1) % 2 != 0) s = -s;
      sgn_c[i + 1] = s;
    }
    seq_.clear();
    for (std::size_t i = 0; i < prs.seq.size(); ++i) {
      seq_.push_back(sgn_c[i] > 0 ? prs.seq[i] : -prs.seq[i]);
    }
  }

  std::vector<IntPoly> seq_;
};

// Number of distinct real roots of p in (a, b].
inline int sturm_count(const IntPoly& p, const RatQ& a, const RatQ& b) {
  return SturmSequence(p).count(a, b);
}

struct RealRoots {
  std::vector<RatQ> exact;         // rational roots, ascending
  std::vector<Interval> isolating;  // one simple irrational root each, ascending
};

namespace detail {

// Shrinks an isolating interval of a squarefree p (opposite signs at the ends)
// below width 1/|lc|; then at most one fraction k/|lc| lies inside, and every
// rational root of p has that form.
inline std::optional<RatQ> rational_root_in(const IntPoly& sf, Interval& iv) {
  const mpz_class lc = abs(sf.leading());
  const RatQ limit(1, lc);
  int s_lo = sign_at(sf, iv.lo);
  while (iv.hi - iv.lo >= limit) {
    RatQ mid = (iv.lo + iv.hi) / 2;
    int s = sign_at(sf, mid);
    if (s == 0) return mid;
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  mpz_class k;
  mpz_class scaled_num = iv.lo.get_num() * lc;
  mpz_fdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), iv.lo.get_den().get_mpz_t());
  k += 1;
  RatQ cand = make_rat(k, lc);
  if (cand < iv.hi && sign_at(sf, cand) == 0) return cand;
  return std::nullopt;
}

}  // namespace detail

inline RealRoots isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("isolate_real_roots of the zero polynomial");
  RealRoots out;
  if (p.degree() < 1) return out;
  const SturmSequence sturm(p);
  const IntPoly& sf = sturm.squarefree();

  const mpz_class bound = root_bound_pow2(sf);

  auto open_count = [&](const RatQ& lo, const RatQ& hi) {
    return sturm.count(lo, hi) - (sign_at(sf, hi) == 0 ? 1 : 0);
  };

  // variation counts at the endpoints travel with each interval: one new evaluation per split
  struct Work {
    RatQ lo, hi;
    int v_lo, v_hi;
    int n() const { return v_lo - v_hi; }  // roots in (lo, hi]
  };
  std::vector<Work> stack;
  const RatQ top(bound), bottom(-bound);
  stack.push_back({bottom, top, sturm.variations_at(bottom), sturm.variations_at(top)});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    // a root at hi was recorded when hi was created as a midpoint
    const int n = w.n() - (sign_at(sf, w.hi) == 0 ? 1 : 0);
    if (n == 0) continue;
    if (n == 1) {
      Interval iv{w.lo, w.hi};
      // endpoints may be exact roots found earlier; move them off
      while (sign_at(sf, iv.lo) == 0 || sign_at(sf, iv.hi) == 0) {
        RatQ mid = (iv.lo + iv.hi) / 2;
        if (sign_at(sf, mid) == 0) {
          out.exact.push_back(mid);
          iv.lo = iv.hi;  // the single root was mid
          break;
        }
        if (open_count(iv.lo, mid) == 1) {
          iv.hi = mid;
        } else {
          iv.lo = mid;
        }
      }
      if (iv.lo == iv.hi) continue;
      Interval narrowed = iv;
      if (auto r = detail::rational_root_in(sf, narrowed)) {
        out.exact.push_back(*r);
      } else {
        // report a short interval so it also locates the root to 1/16
        const RatQ width(1, 16);
        const int s_lo = sign_at(sf, narrowed.lo);
        while (narrowed.hi - narrowed.lo > width) {
          RatQ mid = (narrowed.lo + narrowed.hi) / 2;
          if (sign_at(sf, mid) == s_lo) {
            narrowed.lo = mid;
          } else {
            narrowed.hi = mid;
          }
        }
        out.isolating.push_back(narrowed);
      }
      continue;
    }
    RatQ mid = (w.lo + w.hi) / 2;
    if (sign_at(sf, mid) == 0) out.exact.push_back(mid);
    const int v_mid = sturm.variations_at(mid);
    stack.push_back({mid, w.hi, v_mid, w.v_hi});
    stack.push_back({w.lo, mid, w.v_lo, v_mid});
  }
  std::sort(out.exact.begin(), out.exact.end());
  std::sort(out.isolating.begin(), out.isolating.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

namespace detail {

// p(x) and p'(x) by Horner at the precision of x.
inline std::pair<mp::Real, mp::Real> eval_with_derivative(const IntPoly& p, const mp::Real& x) {
  const mp::Bits prec = x.precision();
  mp::Real v(prec), dv(prec), c(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    mpfr_mul(dv.get(), dv.get(), x.get(), MPFR_RNDN);
    mpfr_add(dv.get(), dv.get(), v.get(), MPFR_RNDN);
    mpfr_mul(v.get(), v.get(), x.get(), MPFR_RNDN);
    mpfr_set_z(c.get(), it->get_mpz_t(), MPFR_RNDN);
    mpfr_add(v.get(), v.get(), c.get(), MPFR_RNDN);
  }
  return {std::move(v), std::move(dv)};
}

inline mp::Bits first_rung(const mp::Real& tol, const RatQ& magnitude) {
  // smallest ladder rung whose unit roundoff sits comfortably below tol
  double log2_tol = tol.is_zero() ? -1e9 : static_cast<double>(tol.exponent2());
  double log2_mag = std::max(0.0, std::log2(std::max(1.0, std::abs(magnitude.get_d()))));
  mp::Bits p = mp::kDefaultBits;
  while (static_cast<double>(-(p - 24)) + log2_mag > log2_tol && p < mp::kCeilingBits) p *= 2;
  return p;
}

// log2 of sum |a_k| |x|^k: bits lost to cancellation when evaluating p near x.
inline double cancellation_bits(const IntPoly& p, const RatQ& x) {
  const double lx = std::log2(std::max(std::abs(x.get_d()), 1e-300));
  double best = -1e300;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const mpz_class& a = p.coeffs()[k];
    if (a == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    best = std::max(best, std::log2(std::abs(m)) + static_cast<double>(e) + lx * static_cast<double>(k));
  }
  return std::max(0.0, best + std::log2(static_cast<double>(p.coeffs().size())));
}

}  // namespace detail

// Certified approximation of the unique simple root of p in iso.
inline RootApprox refine_root(const IntPoly& p, Interval iso, const mp::Real& tol,
                              mp::Bits ceiling = mp::kCeilingBits) {
  if (p.is_zero()) throw DomainError("refine_root of the zero polynomial");
  if (!(iso.lo < iso.hi)) throw PreconditionError("refine_root: empty interval");
  int s_lo = sign_at(p, iso.lo);
  int s_hi = sign_at(p, iso.hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
    throw PreconditionError("refine_root: interval must bracket a simple root with a sign change");
  if (!(tol > 0.0)) throw DomainError("refine_root: tolerance must be positive");

  const RatQ tol_q = tol.to_mpq();
  const mpz_class lc = abs(p.leading());
  const RatQ rational_limit(1, lc);
  const RatQ newton_width(1, mpz_class(1) << 24);

  // exact bisection: to a Newton basin, and far enough to expose a rational root
  bool candidate_checked = false;
  for (;;) {
    RatQ width = iso.hi - iso.lo;
    if (!candidate_checked && width < rational_limit) {
      candidate_checked = true;
      mpz_class k;
      mpz_class scaled_num = iso.lo.get_num() * lc;
      mpz_fdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), iso.lo.get_den().get_mpz_t());
      k += 1;
      RatQ cand = make_rat(k, lc);
      if (cand < iso.hi && sign_at(p, cand) == 0) {
        return RootApprox::from_exact(cand, detail::first_rung(tol, cand));
      }
    }
    if (width <= 2 * tol_q) {
      RatQ mid = (iso.lo + iso.hi) / 2;
      mp::Bits prec = detail::first_rung(tol, mid);
      mp::Real rad(RatQ(width / 2), prec);
      mpfr_nextabove(rad.get());
      return RootApprox{mp::Real(mid, prec), std::move(rad), prec, std::nullopt};
    }
    if (width < newton_width && candidate_checked) break;
    RatQ mid = (iso.lo + iso.hi) / 2;
    int s = sign_at(p, mid);
    if (s == 0) return RootApprox::from_exact(mid, detail::first_rung(tol, mid));
    if (s == s_lo) {
      iso.lo = mid;
    } else {
      iso.hi = mid;
    }
  }

  const IntPoly dp = derivative(p);
  const RatQ start = (iso.lo + iso.hi) / 2;
  mp::Bits prec0 = detail::first_rung(tol, start);
  const double lost = detail::cancellation_bits(p, start);
  while (static_cast<double>(prec0) < lost + static_cast<double>(-tol.exponent2()) + 32 && prec0 < ceiling) prec0 *= 2;
  for (mp::Bits prec = prec0; prec <= ceiling; prec *= 2) {
    mp::Real x(start, prec);
    mp::Real step(prec);
    mp::Real last_step(prec);
    for (int it = 0; it < 200; ++it) {
      auto [v, dv] = detail::eval_with_derivative(p, x);
      if (v.is_zero()) {
        step = mp::Real(prec);
        break;
      }
      if (dv.is_zero()) break;
      step = v / dv;
      x -= step;
      // stagnation: rounding noise dominates, the next rung must take over
      if (it > 8 && mp::abs(step) >= mp::abs(last_step)) break;
      last_step = step;
      mp::Real scale = mp::max(mp::Real(1L, prec), mp::abs(x));
      if (mp::abs(step) <= mp::ldexp(scale, -(prec - 8))) break;
    }
    mp::Real scale = mp::max(mp::Real(1L, prec), mp::abs(x));
    mp::Real rad = mp::max(mp::abs(step) * 4L, mp::ldexp(scale, -(prec - 16)));
    if (rad > tol) continue;
    // certify on short dyadic endpoints: exact signs there are cheap
    const long k = 8 - tol.exponent2();
    const RatQ xq = x.to_mpq();
    const RatQ rq = rad.to_mpq();
    const mpz_class scale_k = mpz_class(1) << static_cast<mp_bitcnt_t>(k);
    mpz_class an, bn;
    const RatQ as = (xq - rq) * RatQ(scale_k), bs = (xq + rq) * RatQ(scale_k);
    mpz_fdiv_q(an.get_mpz_t(), as.get_num().get_mpz_t(), as.get_den().get_mpz_t());
    mpz_cdiv_q(bn.get_mpz_t(), bs.get_num().get_mpz_t(), bs.get_den().get_mpz_t());
    const RatQ a = make_rat(an, scale_k), b = make_rat(bn, scale_k);
    if (a < iso.lo || b > iso.hi) continue;
    mp::Real cert_rad(std::max(RatQ(xq - a), RatQ(b - xq)), prec);
    mpfr_nextabove(cert_rad.get());
    if (cert_rad > tol) continue;
    int sa = sign_at(p, a), sb = sign_at(p, b);
    if (sa == 0) return RootApprox::from_exact(a, prec);
    if (sb == 0) return RootApprox::from_exact(b, prec);
    if (sa != sb) return RootApprox{std::move(x), std::move(cert_rad), prec, std::nullopt};
  }
  throw NumericFailure("refine_root: no certified approximation below the precision ceiling");
}

struct CriticalDistanceOptions {
  // Cross-checks uniqueness in (1, B] with a Sturm sequence as well as by
  // Descartes' rule on the shifted polynomial. Costly for large d.
  bool sturm_check = false;
};

// R_q: the unique zero of G(d,q;z) in (1, inf).
inline RootApprox critical_distance(int d, const RatQ& q, const mp::Real& tol,
                                    const CriticalDistanceOptions& opt = {}) {
  const GoncharInstance inst = gonchar_poly_q(d, q);
  const IntPoly& p = inst.poly;
  // exactly one sign change in G(d,q;1+w): one root with w > 0
  if (sign_changes(shift_at_one(inst)) != 1)
    throw std::logic_error("critical_distance: Descartes certificate failed");
  const mpz_class bound = cauchy_bound(p);
  if (opt.sturm_check) {
    SturmSequence sturm(p);
    if (sturm.count(RatQ(1), RatQ(bound)) != 1 || sturm.count(RatQ(bound), RatQ(bound * 2)) != 0)
      throw std::logic_error("critical_distance: Sturm count in (1, B] differs from 1");
  }
  if (sign_at(p, RatQ(1)) >= 0) throw std::logic_error("critical_distance: G(d,q;1) must be negative");
  // bracket: 1 + 2^k up to the Cauchy bound
  RatQ lo = 1, hi = 2;
  while (sign_at(p, hi) <= 0) {
    if (sign_at(p, hi) == 0) return RootApprox::from_exact(hi, detail::first_rung(tol, hi));
    lo = hi;
    hi = 2 * hi - 1;
    if (hi > RatQ(bound)) hi = RatQ(bound);
  }
  return refine_root(p, Interval{lo, hi}, tol);
}

// rho(d) = R_1 - 1.
inline RootApprox rho(int d, const mp::Real& tol) {
  RootApprox r = critical_distance(d, RatQ(1), tol);
  r.value -= 1L;
  if (r.exact) *r.exact -= 1;
  return r;
}

// 2 + ln(3q)/d.
inline mp::Real asymptotic_estimate(int d, const RatQ& q, mp::Bits prec = mp::kDefaultBits) {
  if (d < 1) throw DomainError("asymptotic_estimate: d must be >= 1");
  if (sgn(q) <= 0) throw DomainError("asymptotic_estimate: q must be > 0");
  mp::Real three_q(RatQ(3 * q), prec);
  mp::Real est = mp::log(three_q) / static_cast<long>(d);
  est += 2L;
  return est;
}

struct ResidualRow {
  int d;
  RootApprox root;
  mp::Real residual;  // R_q - (2 + ln(3q)/d)
  mp::Real scaled;    // residual * d^2
};

inline std::vector<ResidualRow> residual_scan(const RatQ& q, std::span<const int> d_list, const mp::Real& tol) {
  std::vector<ResidualRow> rows;
  rows.reserve(d_list.size());
  for (int d : d_list) {
    if (d < 2) throw DomainError("residual_scan: every d must be >= 2");
    RootApprox r = critical_distance(d, q, tol);
    mp::Real res = r.value - asymptotic_estimate(d, q, r.value.precision());
    mp::Real scaled = res * static_cast<long>(d) * static_cast<long>(d);
    rows.push_back(ResidualRow{d, std::move(r), std::move(res), std::move(scaled)});
  }
  return rows;
}

struct MonotoneReport {
  bool decreasing = true;   // certified strict decrease along d_list
  bool above_two = true;    // last value certified > 2
  std::vector<std::pair<int, RootApprox>> table;
  bool ok() const { return decreasing && above_two; }
};

inline MonotoneReport xi_monotone_check(std::span<const int> d_list, const mp::Real& tol) {
  MonotoneReport rep;
  for (std::size_t i = 0; i < d_list.size(); ++i) {
    if (d_list[i] < 1) throw DomainError("xi_monotone_check: d must be >= 1");
    if (i > 0 && d_list[i] <= d_list[i - 1]) throw PreconditionError("xi_monotone_check: d_list must increase");
    rep.table.emplace_back(d_list[i], critical_distance(d_list[i], RatQ(1), tol));
    if (i > 0) {
      const RootApprox& prev = rep.table[i - 1].second;
      const RootApprox& cur = rep.table[i].second;
      if (!(prev.value - prev.radius > cur.value + cur.radius)) rep.decreasing = false;
    }
  }
  if (!rep.table.empty()) {
    const RootApprox& last = rep.table.back().second;
    rep.above_two = last.value - last.radius > 2.0;
  }
  return rep;
}

}  // namespace gonchar

#endif  // GONCHAR_ROOTKIT_REAL_HPP
