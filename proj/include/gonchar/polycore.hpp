// Exact integer polynomials and the Gonchar family G(d,q;z).
//
//   G(d,q;z) = [(z-1)^d / q - z - 1] z^(d-1) + (z-1)^d,   G(d;z) = G(d,1;z).
//
// Coefficients are dense and ascending (index k holds the coefficient of z^k),
// stored as GMP integers. All functions here are exact and free of floating point.
#ifndef GONCHAR_POLYCORE_HPP
#define GONCHAR_POLYCORE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gonchar/errors.hpp"

namespace gonchar {

using RatQ = mpq_class;

inline RatQ make_rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  RatQ q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "a", "a/b", "-a/b" (integers in base 10).
inline RatQ parse_rat(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    mpz_class z;
    std::string buf(s);
    bool ok = !buf.empty() && z.set_str(buf, 10) == 0;
    if (!ok) throw DomainError("malformed rational '" + std::string(text) + "'");
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RatQ(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// Always "num/den", also for integers.
inline std::string rat_to_string(const RatQ& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const mpz_class> coeffs() const noexcept { return c_; }
  const mpz_class& coeff(std::size_t k) const {
    static const mpz_class zero = 0;
    return k < c_.size() ? c_[k] : zero;
  }
  const mpz_class& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  IntPoly& operator*=(const mpz_class& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }

  // Multiplies by z^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<mpz_class> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// Raised by divide_exact when the quotient is not an integer polynomial.
// Carries the remainder of the division over the rationals.
class InexactDivision : public std::runtime_error {
 public:
  explicit InexactDivision(std::vector<RatQ> remainder)
      : std::runtime_error("polynomial division is not exact"), remainder_(std::move(remainder)) {}
  const std::vector<RatQ>& remainder() const noexcept { return remainder_; }

 private:
  std::vector<RatQ> remainder_;
};

// (z - 1)^d, ascending.
inline IntPoly z_minus_one_pow(int d) {
  std::vector<mpz_class> v(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    v[k] = binomial(d, k);
    if ((d - k) % 2 != 0) v[k] = -v[k];
  }
  return IntPoly(std::move(v));
}

inline IntPoly gonchar_poly(int d) {
  if (d < 1) throw DomainError("gonchar_poly: d must be >= 1");
  const IntPoly zm1d = z_minus_one_pow(d);
  // [(z-1)^d - z - 1] z^(d-1) + (z-1)^d
  IntPoly g = (zm1d - IntPoly{1, 1}).shifted(static_cast<std::size_t>(d - 1));
  g += zm1d;
  return g;
}

struct GoncharInstance {
  int d = 1;
  RatQ q = 1;
  IntPoly poly;                 // clearing_factor * G(d,q;z), integer coefficients
  mpz_class clearing_factor = 1;  // numerator of q
};

// Multiplies G(d,q;z) through by q_num, with q = q_num/q_den:
//   q_den (z-1)^d z^(d-1) - q_num (z+1) z^(d-1) + q_num (z-1)^d.
inline GoncharInstance gonchar_poly_q(int d, const RatQ& q) {
  if (d < 1) throw DomainError("gonchar_poly_q: d must be >= 1");
  if (sgn(q) <= 0) throw DomainError("gonchar_poly_q: q must be > 0");
  const mpz_class& a = q.get_num();
  const mpz_class& b = q.get_den();
  const IntPoly zm1d = z_minus_one_pow(d);
  const auto shift = static_cast<std::size_t>(d - 1);
  IntPoly poly = (zm1d * b).shifted(shift) - (IntPoly{1, 1} * a).shifted(shift) + zm1d * a;
  return GoncharInstance{d, q, std::move(poly), a};
}

// z^deg(p) p(1/z): coefficient reversal, canonicalized.
inline IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("reciprocal of the zero polynomial");
  std::vector<mpz_class> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(v));
}

inline RatQ eval_exact(const IntPoly& p, const RatQ& x) {
  RatQ acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// Sign of p(x) for rational x, via the homogenized integer form
// sum c_k num^k den^(n-k); avoids rational normalization in Horner.
inline int sign_at(const IntPoly& p, const RatQ& x) {
  if (p.is_zero()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.leading();
  mpz_class dpow = 1;
  for (int k = p.degree() - 1; k >= 0; --k) {
    dpow *= den;
    acc *= num;
    acc += p.coeff(static_cast<std::size_t>(k)) * dpow;
  }
  return sgn(acc);
}

// Sign of p at +infinity (towards_positive) or -infinity.
inline int sign_at_infinity(const IntPoly& p, bool towards_positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  return (towards_positive || p.degree() % 2 == 0) ? s : -s;
}

inline IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) v[k - 1] = p.coeff(k) * static_cast<unsigned long>(k);
  return IntPoly(std::move(v));
}

// Nonnegative gcd of the coefficients (0 for the zero polynomial).
inline mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
inline IntPoly primitive_normalized(const IntPoly& p) {
  if (p.is_zero()) return {};
  mpz_class c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

inline IntPoly divexact_scalar(const IntPoly& p, const mpz_class& s) {
  std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return IntPoly(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a  mod  b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    const mpz_class lead = r[dr];
    const int shift = dr - db;
    for (int k = 0; k < dr; ++k) r[k] *= lb;
    for (int k = 0; k < db; ++k) r[k + shift] -= lead * b.coeff(k);
    r[dr] = 0;
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : r) x *= f;
  }
  return IntPoly(std::move(r));
}

// Subresultant polynomial remainder sequence r0 = a, r1 = b, r_{i+1} = prem(r_{i-1}, r_i) / beta_i.
// beta[i-1] holds beta_i, so seq[i+1] * beta[i-1] == prem(seq[i-1], seq[i]).
struct SubresultantPrs {
  std::vector<IntPoly> seq;
  std::vector<mpz_class> beta;
};

inline SubresultantPrs subresultant_prs(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || a.degree() < b.degree()) throw DomainError("subresultant_prs needs deg a >= deg b, a != 0");
  SubresultantPrs out;
  out.seq = {a, b};
  if (b.is_zero()) {
    out.seq.pop_back();
    return out;
  }
  int delta = a.degree() - b.degree();
  mpz_class beta = (delta % 2 == 0) ? -1 : 1;  // (-1)^(delta+1)
  mpz_class psi = -1;
  for (std::size_t i = 1;; ++i) {
    IntPoly r = pseudo_remainder(out.seq[i - 1], out.seq[i]);
    out.beta.push_back(beta);
    if (r.is_zero()) break;
    r = divexact_scalar(r, beta);
    const mpz_class lc = out.seq[i].leading();
    out.seq.push_back(std::move(r));
    if (out.seq.back().degree() == 0) break;
    // psi_{i+1} = (-lc)^delta / psi^(delta-1)
    // psi is unchanged when delta == 0: (-lc)^0 / psi^(-1) == psi.
    mpz_class neg_lc = -lc;
    if (delta != 0) {
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), neg_lc.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), psi.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(psi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    delta = out.seq[i].degree() - out.seq.back().degree();
    mpz_class psid;
    mpz_pow_ui(psid.get_mpz_t(), psi.get_mpz_t(), static_cast<unsigned long>(delta));
    beta = neg_lc * psid;
  }
  return out;
}

// Primitive gcd with positive leading coefficient; gcd of coprime inputs is 1.
inline IntPoly exact_gcd(const IntPoly& p, const IntPoly& r) {
  if (p.is_zero() && r.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (r.is_zero()) return primitive_normalized(p);
  if (p.is_zero()) return primitive_normalized(r);
  const bool p_first = p.degree() >= r.degree();
  const IntPoly& a = p_first ? p : r;
  const IntPoly& b = p_first ? r : p;
  if (b.degree() == 0) return IntPoly{1};
  auto prs = subresultant_prs(primitive_normalized(a), primitive_normalized(b));
  const IntPoly& last = prs.seq.back();
  if (last.degree() == 0) return IntPoly{1};
  return primitive_normalized(last);
}

// Division over Q: returns (quotient, remainder) as rational coefficient vectors.
inline std::pair<std::vector<RatQ>, std::vector<RatQ>> divmod_rational(const IntPoly& p, const IntPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<RatQ> rem(p.coeffs().begin(), p.coeffs().end());
  const int dd = divisor.degree();
  const int dp = p.degree();
  std::vector<RatQ> quot(static_cast<std::size_t>(std::max(0, dp - dd + 1)));
  const RatQ lc = divisor.leading();
  for (int k = dp; k >= dd; --k) {
    if (rem[k] == 0) continue;
    RatQ f = rem[k] / lc;
    quot[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(std::max(0, std::min(dp + 1, dd))));
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  while (!quot.empty() && quot.back() == 0) quot.pop_back();
  return {std::move(quot), std::move(rem)};
}

// Exact quotient over the integers; InexactDivision otherwise.
inline IntPoly divide_exact(const IntPoly& p, const IntPoly& divisor) {
  auto [quot, rem] = divmod_rational(p, divisor);
  bool integral = std::all_of(quot.begin(), quot.end(), [](const RatQ& c) { return c.get_den() == 1; });
  if (!rem.empty() || !integral) {
    if (rem.empty()) rem.push_back(0);  // non-integral quotient with zero remainder over Q
    throw InexactDivision(std::move(rem));
  }
  std::vector<mpz_class> v;
  v.reserve(quot.size());
  for (auto& c : quot) v.push_back(c.get_num());
  return IntPoly(std::move(v));
}

inline bool divides(const IntPoly& divisor, const IntPoly& p) {
  auto [quot, rem] = divmod_rational(p, divisor);
  return rem.empty() &&
         std::all_of(quot.begin(), quot.end(), [](const RatQ& c) { return c.get_den() == 1; });
}

// p(z + a).
inline IntPoly taylor_shift(const IntPoly& p, const mpz_class& a) {
  std::vector<mpz_class> c(p.coeffs().begin(), p.coeffs().end());
  const int n = p.degree();
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j) c[j] += a * c[j + 1];
  return IntPoly(std::move(c));
}

// cleared G(d,q;1+w) as a polynomial in w.
inline IntPoly shift_at_one(const GoncharInstance& inst) { return taylor_shift(inst.poly, 1); }

// Sign changes in the coefficient sequence, zeros skipped.
inline int sign_changes(const IntPoly& p) {
  int changes = 0;
  int prev = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Integer B with |root| < B for every complex root (Cauchy: 1 + max |a_k / a_n|, rounded up).
inline mpz_class cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  mpz_class m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpz_class(abs(p.coeff(k))));
  mpz_class lc = abs(p.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
  return q + 2;
}

// Power of two strictly above every root modulus: twice the least 2^m with
// |a_(n-k)| <= |a_n| 2^((m-1)k) for all k, which dominates the Fujiwara bound.
inline mpz_class root_bound_pow2(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  const int n = p.degree();
  const mpz_class lc = abs(p.leading());
  unsigned long m = 1;
  for (int k = 1; k <= n; ++k) {
    const mpz_class a = abs(p.coeff(static_cast<std::size_t>(n - k)));
    if (a == 0) continue;
    for (;;) {
      mpz_class rhs = lc;
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), (m - 1) * static_cast<unsigned long>(k));
      if (a <= rhs) break;
      ++m;
    }
  }
  mpz_class b = 1;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), m + 1);
  return b;
}

// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return primitive_normalized(p);
  IntPoly g = exact_gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_normalized(p);
  return primitive_normalized(divide_exact(primitive_normalized(p), g));
}

}  // namespace gonchar

#endif  // GONCHAR_POLYCORE_HPP
