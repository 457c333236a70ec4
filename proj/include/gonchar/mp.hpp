// Multiprecision real and complex values over MPFR with explicit bit precision.
//
// A Real owns one mpfr_t. Binary operators produce a result at the larger of
// the two operand precisions; compound assignment keeps the precision of the
// left-hand side. Hot loops use the in-place helpers at the bottom of the file.
#ifndef GONCHAR_MP_HPP
#define GONCHAR_MP_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gonchar::mp {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;
inline constexpr Bits kCeilingBits = 16384;

class Real {
 public:
  explicit Real(Bits prec = kDefaultBits) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, Bits prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, Bits prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, Bits prec) : Real(static_cast<long>(x), prec) {}
  Real(const mpz_class& x, Bits prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& x, Bits prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  // Parses a decimal string ("-1.25", "3e-7"). Throws std::invalid_argument.
  Real(std::string_view text, Bits prec) {
    mpfr_init2(v_, prec);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size()) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }
  // Rounds the value to a new precision.
  void set_precision(Bits prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  // Exact conversion: every finite binary float is a dyadic rational.
  mpq_class to_mpq() const {
    if (!is_finite()) throw std::domain_error("non-finite value has no rational form");
    mpq_class q;
    if (is_zero()) return q;
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    q = m;
    if (e >= 0) {
      mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return q;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

namespace detail {
inline Bits max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace detail

inline Real operator+(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator+(Real a, long b) { return a += b; }
inline Real operator-(Real a, long b) { return a -= b; }
inline Real operator*(Real a, long b) { return a *= b; }
inline Real operator/(Real a, long b) { return a /= b; }
inline Real operator+(long a, Real b) { return b += a; }
inline Real operator*(long a, Real b) { return b *= a; }
inline Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }
inline int cmp(const Real& a, long b) { return mpfr_cmp_si(a.get(), b); }
inline int cmp(const Real& a, double b) { return mpfr_cmp_d(a.get(), b); }
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
inline bool operator<(const Real& a, double b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, double b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, double b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, double b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, double b) { return cmp(a, b) == 0; }

#define GONCHAR_MP_UNARY(name, fn)             \
  inline Real name(const Real& x) {            \
    Real r(x.precision());                     \
    fn(r.get(), x.get(), MPFR_RNDN);           \
    return r;                                  \
  }
GONCHAR_MP_UNARY(abs, mpfr_abs)
GONCHAR_MP_UNARY(sqrt, mpfr_sqrt)
GONCHAR_MP_UNARY(cbrt, mpfr_cbrt)
GONCHAR_MP_UNARY(sin, mpfr_sin)
GONCHAR_MP_UNARY(cos, mpfr_cos)
GONCHAR_MP_UNARY(tan, mpfr_tan)
GONCHAR_MP_UNARY(log, mpfr_log)
GONCHAR_MP_UNARY(log2, mpfr_log2)
GONCHAR_MP_UNARY(log10, mpfr_log10)
GONCHAR_MP_UNARY(exp, mpfr_exp)
GONCHAR_MP_UNARY(gamma, mpfr_gamma)
#undef GONCHAR_MP_UNARY

inline Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(detail::max_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(detail::max_prec(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(detail::max_prec(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
// 2^e as an exact value.
inline Real pow2(long e, Bits prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

// Number of decimal digits that survive a binary -> decimal -> binary round trip.
inline int decimal_digits(Bits prec) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(prec - 1) * 0.30102999566398119521)));
}

// Decimal rendering used by every emitted file: '.' separator, leading '-',
// positional notation for |x| < 1e6 and scientific notation above. `sig`
// significant digits (defaults to the precision's round-trip digit count).
inline std::string to_decimal(const Real& x, int sig = 0, mpfr_rnd_t rnd = MPFR_RNDN) {
  if (!x.is_finite()) throw std::domain_error("cannot format a non-finite value");
  if (sig <= 0) sig = decimal_digits(x.precision());
  if (x.is_zero()) return "0";
  Real ax = abs(x);
  char* buf = nullptr;
  int rc;
  if (ax >= 1e6) {
    rc = mpfr_asprintf(&buf, "%.*R*e", sig - 1, rnd, x.get());
  } else {
    Real lg(64);
    mpfr_log10(lg.get(), ax.get(), MPFR_RNDN);
    long e10 = static_cast<long>(std::floor(lg.to_double()));
    int frac = std::max(0, static_cast<int>(sig - 1 - e10));
    rc = mpfr_asprintf(&buf, "%.*R*f", frac, rnd, x.get());
  }
  if (rc < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------------------

struct Complex {
  Real re;
  Real im;

  explicit Complex(Bits prec = kDefaultBits) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i, Bits prec) : re(r, prec), im(i, prec) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }
  void set_precision(Bits prec) {
    re.set_precision(prec);
    im.set_precision(prec);
  }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }
inline Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

// In-place kernels for inner loops; `out` may alias the inputs.
namespace inplace {

inline void sub(Complex& out, const Complex& a, const Complex& b) {
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// out = a * b, using t1, t2 as scratch.
inline void mul(Complex& out, const Complex& a, const Complex& b, Real& t1, Real& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_fma(out.im.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
  mpfr_swap(out.re.get(), t1.get());
}

// acc = acc * z + c  (c real); t1, t2 scratch.
inline void horner_step(Complex& acc, const Complex& z, const Real& c, Real& t1, Real& t2) {
  mul(acc, acc, z, t1, t2);
  mpfr_add(acc.re.get(), acc.re.get(), c.get(), MPFR_RNDN);
}

// acc += 1 / d ; t1, t2 scratch.
inline void add_reciprocal(Complex& acc, const Complex& d, Real& t1, Real& t2) {
  mpfr_sqr(t1.get(), d.re.get(), MPFR_RNDN);
  mpfr_fma(t1.get(), d.im.get(), d.im.get(), t1.get(), MPFR_RNDN);
  mpfr_div(t2.get(), d.re.get(), t1.get(), MPFR_RNDN);
  mpfr_add(acc.re.get(), acc.re.get(), t2.get(), MPFR_RNDN);
  mpfr_div(t2.get(), d.im.get(), t1.get(), MPFR_RNDN);
  mpfr_sub(acc.im.get(), acc.im.get(), t2.get(), MPFR_RNDN);
}

}  // namespace inplace

}  // namespace gonchar::mp

#endif  // GONCHAR_MP_HPP
