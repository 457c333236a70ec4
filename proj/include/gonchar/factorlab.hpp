// Divisibility rules and irreducibility evidence for Gonchar polynomials.
#ifndef GONCHAR_FACTORLAB_HPP
#define GONCHAR_FACTORLAB_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <bit>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gonchar/errors.hpp"
#include "gonchar/polycore.hpp"
#include "gonchar/zp.hpp"

namespace gonchar {

// 1 for odd d, z+1 for even d not divisible by 6, (z+1)(z^2-z+1) = z^3+1 for 6 | d.
inline IntPoly ell_factor(int d) {
  if (d < 1) throw DomainError("ell_factor: d must be >= 1");
  if (d % 2 != 0) return IntPoly{1};
  if (d % 6 != 0) return IntPoly{1, 1};
  return IntPoly{1, 1} * IntPoly{1, -1, 1};
}

struct Divisibility {
  bool divides_z_plus_1 = false;
  bool divides_cyclotomic = false;  // z^2 - z + 1
};

inline Divisibility known_divisibility(int d) {
  const IntPoly g = gonchar_poly(d);
  return Divisibility{divides(IntPoly{1, 1}, g), divides(IntPoly{1, -1, 1}, g)};
}

// G(d;z) / ell(d;z); an inexact division would contradict the divisibility rules.
inline IntPoly reduced_polynomial(int d) {
  try {
    return divide_exact(gonchar_poly(d), ell_factor(d));
  } catch (const InexactDivision&) {
    throw std::logic_error("reduced_polynomial: ell(d) does not divide G(d) for d = " + std::to_string(d));
  }
}

struct FactorPattern {
  std::uint64_t p = 0;
  std::vector<int> degrees;  // ascending
};

enum class PatternStatus { Ok, LeadingCoefficientVanishes, NotSquarefree };

struct PatternResult {
  PatternStatus status = PatternStatus::Ok;
  FactorPattern pattern;
  bool skipped() const { return status != PatternStatus::Ok; }
};

namespace detail {

// (factor, k): factor is the product of all monic irreducibles of degree k.
inline std::vector<std::pair<ZpPoly, int>> distinct_degree(ZpPoly f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ZpPoly, int>> out;
  f = f.monic();
  const ZpPoly x = ZpPoly::x_power(p, 1);
  ZpPoly h = x % f;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = ZpPoly::powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
    ZpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = (f / g).monic();
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Splits f, a product of distinct monic irreducibles of degree k.
inline void equal_degree(const ZpPoly& f, int k, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  if (f.degree() == k) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  e = (e - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& x : c) x = coef(rng);
    ZpPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    ZpPoly b(p);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(k-1)) mod f
      ZpPoly t = a % f, acc = a % f;
      for (int i = 1; i < k; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = ZpPoly::powmod(a, e, f) - ZpPoly(p, {1});
    }
    ZpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree((f / g).monic(), k, rng, out);
      return;
    }
  }
}

}  // namespace detail

inline PatternResult factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
  PatternResult r;
  r.pattern.p = p;
  if (f.degree() < 1) throw PreconditionError("factor_degrees_mod_p: degree >= 1 required");
  const ZpPoly fp = ZpPoly::reduce(f, p);
  if (fp.degree() != f.degree()) {
    r.status = PatternStatus::LeadingCoefficientVanishes;
    return r;
  }
  const ZpPoly dp = fp.derivative();
  if (dp.is_zero() || gcd(fp, dp).degree() != 0) {
    r.status = PatternStatus::NotSquarefree;
    return r;
  }
  for (const auto& [g, k] : detail::distinct_degree(fp)) {
    for (int i = 0; i < g.degree() / k; ++i) r.pattern.degrees.push_back(k);
  }
  std::sort(r.pattern.degrees.begin(), r.pattern.degrees.end());
  return r;
}

// Monic irreducible factors of f mod p (f squarefree mod p, p not dividing lc).
inline std::vector<ZpPoly> factor_mod_p(const IntPoly& f, std::uint64_t p) {
  const ZpPoly fp = ZpPoly::reduce(f, p);
  if (fp.degree() != f.degree()) throw PreconditionError("factor_mod_p: p divides the leading coefficient");
  if (gcd(fp, fp.derivative()).degree() != 0) throw PreconditionError("factor_mod_p: reduction is not squarefree");
  std::mt19937_64 rng(0xfac7ULL ^ p);
  std::vector<ZpPoly> out;
  for (const auto& [g, k] : detail::distinct_degree(fp)) detail::equal_degree(g, k, rng, out);
  std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
  });
  return out;
}

// Degrees of proper factors compatible with a pattern: subset sums other than 0 and n.
inline std::set<int> achievable_degrees(const FactorPattern& pat) {
  int n = 0;
  for (int k : pat.degrees) n += k;
  std::vector<bool> can(static_cast<std::size_t>(n) + 1, false);
  can[0] = true;
  for (int k : pat.degrees) {
    for (int s = n; s >= k; --s) {
      if (can[static_cast<std::size_t>(s - k)]) can[static_cast<std::size_t>(s)] = true;
    }
  }
  std::set<int> out;
  for (int s = 1; s < n; ++s) {
    if (can[static_cast<std::size_t>(s)]) out.insert(s);
  }
  return out;
}

struct ExceptionalFactorization {
  int d;
  std::vector<IntPoly> factors;  // product is G(d;z); ell factors first
};

// Factor lists for the exceptional dimensions, checked against G(d;z) on first use.
inline const std::vector<ExceptionalFactorization>& exceptional_factorizations() {
  static const std::vector<ExceptionalFactorization> table = [] {
    const IntPoly zp1{1, 1}, cyc{1, -1, 1};
    std::vector<ExceptionalFactorization> t{
        {4, {zp1, IntPoly{-1, 2, -3, 1}, IntPoly{-1, 3, -2, 1}}},
        {8, {zp1, IntPoly{1, -3, 3, -3, 1}, IntPoly{1, -6, 16, -24, 24, -21, 24, -24, 16, -6, 1}}},
        {12,
         {zp1, cyc, IntPoly{1, -4, 5, -3, 5, -4, 1},
          IntPoly{1, -8, 29, -62, 85, -77, 48, -33, 48, -77, 85, -62, 29, -8, 1}}},
    };
    for (const auto& e : t) {
      IntPoly prod{1};
      for (const auto& f : e.factors) prod = prod * f;
      if (prod != gonchar_poly(e.d))
        throw std::logic_error("exceptional factorization table is inconsistent for d = " + std::to_string(e.d));
    }
    return t;
  }();
  return table;
}

enum class IrredStatus { Certified, Reducible, Inconclusive };

inline const char* to_string(IrredStatus s) {
  switch (s) {
    case IrredStatus::Certified:
      return "Certified";
    case IrredStatus::Reducible:
      return "Reducible";
    case IrredStatus::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

struct IrredVerdict {
  IrredStatus status = IrredStatus::Inconclusive;
  std::vector<std::uint64_t> primes_used;
  std::vector<FactorPattern> patterns;
  std::vector<std::set<int>> evidence;  // achievable proper-factor degrees, per prime
  std::set<int> surviving;              // intersection over all primes used
  std::vector<IntPoly> witnesses;       // Reducible only; product equals the input
};

namespace detail {

// Witness factors from the exceptional table whose product is f (at least two factors).
inline std::optional<std::vector<IntPoly>> recombine_known(const IntPoly& f) {
  for (const auto& e : exceptional_factorizations()) {
    const std::size_t m = e.factors.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (std::popcount(mask) < 2) continue;
      IntPoly prod{1};
      std::vector<IntPoly> pick;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1u << i)) {
          prod = prod * e.factors[i];
          pick.push_back(e.factors[i]);
        }
      }
      if (prod == f) return pick;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline IrredVerdict irreducibility_certificate(const IntPoly& f, int prime_budget = 25) {
  if (f.degree() < 1) throw PreconditionError("irreducibility_certificate: degree >= 1 required");
  if (content(f) != 1) throw PreconditionError("irreducibility_certificate: polynomial must be primitive");
  IrredVerdict v;
  if (f.degree() == 1) {
    v.status = IrredStatus::Certified;
    return v;
  }
  bool first = true;
  for (std::uint32_t p : primes_below(10000)) {
    if (static_cast<int>(v.primes_used.size()) >= prime_budget) break;
    PatternResult r = factor_degrees_mod_p(f, p);
    if (r.skipped()) continue;
    v.primes_used.push_back(p);
    std::set<int> ach = achievable_degrees(r.pattern);
    if (first) {
      v.surviving = ach;
      first = false;
    } else {
      std::set<int> keep;
      std::set_intersection(v.surviving.begin(), v.surviving.end(), ach.begin(), ach.end(),
                            std::inserter(keep, keep.begin()));
      v.surviving = std::move(keep);
    }
    v.patterns.push_back(std::move(r.pattern));
    v.evidence.push_back(std::move(ach));
    if (v.surviving.empty()) {
      v.status = IrredStatus::Certified;
      return v;
    }
  }
  IntPoly fn = f.leading() < 0 ? -f : f;
  if (auto w = detail::recombine_known(fn)) {
    v.status = IrredStatus::Reducible;
    v.witnesses = std::move(*w);
    return v;
  }
  v.status = IrredStatus::Inconclusive;
  return v;
}

}  // namespace gonchar

#endif  // GONCHAR_FACTORLAB_HPP
