// Dense polynomials over the field Z/pZ for small primes p (p < 2^31).
#ifndef GONCHAR_ZP_HPP
#define GONCHAR_ZP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gonchar/errors.hpp"
#include "gonchar/polycore.hpp"

namespace gonchar {

// Primes below `limit`, ascending.
inline std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

class ZpPoly {
 public:
  using Coeff = std::uint64_t;

  ZpPoly(std::uint64_t p, std::vector<Coeff> c) : p_(p), c_(std::move(c)) {
    for (auto& x : c_) x %= p_;
    trim();
  }
  explicit ZpPoly(std::uint64_t p) : p_(p) {}

  static ZpPoly reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<Coeff> c(f.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = mpz_fdiv_ui(f.coeffs()[k].get_mpz_t(), static_cast<unsigned long>(p));
    }
    return ZpPoly(p, std::move(c));
  }
  static ZpPoly x_power(std::uint64_t p, std::size_t k) {
    std::vector<Coeff> c(k + 1, 0);
    c[k] = 1;
    return ZpPoly(p, std::move(c));
  }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Coeff leading() const { return c_.empty() ? 0 : c_.back(); }

  friend bool operator==(const ZpPoly& a, const ZpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  Coeff inv(Coeff a) const { return pow_mod(a, p_ - 2); }
  Coeff pow_mod(Coeff a, std::uint64_t e) const {
    Coeff r = 1 % p_;
    a %= p_;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  ZpPoly monic() const {
    if (is_zero()) return *this;
    const Coeff li = inv(leading());
    ZpPoly r = *this;
    for (auto& x : r.c_) x = x * li % p_;
    return r;
  }

  friend ZpPoly operator+(const ZpPoly& a, const ZpPoly& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = (a.coeff(k) + b.coeff(k)) % a.p_;
    return ZpPoly(a.p_, std::move(c));
  }
  friend ZpPoly operator-(const ZpPoly& a, const ZpPoly& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = (a.coeff(k) + a.p_ - b.coeff(k)) % a.p_;
    return ZpPoly(a.p_, std::move(c));
  }
  friend ZpPoly operator*(const ZpPoly& a, const ZpPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZpPoly(a.p_);
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    return ZpPoly(a.p_, std::move(c));
  }

  // a = q*b + r with deg r < deg b.
  static void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) {
    if (b.is_zero()) throw DomainError("ZpPoly division by zero");
    const std::uint64_t p = a.p_;
    std::vector<Coeff> rem = a.c_;
    const int db = b.degree();
    const Coeff li = b.inv(b.leading());
    std::vector<Coeff> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
    for (int k = a.degree(); k >= db; --k) {
      const Coeff f = rem[static_cast<std::size_t>(k)] * li % p;
      if (f == 0) continue;
      quo[static_cast<std::size_t>(k - db)] = f;
      for (int j = 0; j <= db; ++j) {
        auto& t = rem[static_cast<std::size_t>(k - db + j)];
        t = (t + p - f * b.c_[static_cast<std::size_t>(j)] % p) % p;
      }
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    q = ZpPoly(p, std::move(quo));
    r = ZpPoly(p, std::move(rem));
  }
  friend ZpPoly operator%(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly q(a.p_), r(a.p_);
    divmod(a, b, q, r);
    return r;
  }
  friend ZpPoly operator/(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly q(a.p_), r(a.p_);
    divmod(a, b, q, r);
    return q;
  }

  ZpPoly derivative() const {
    if (c_.size() <= 1) return ZpPoly(p_);
    std::vector<Coeff> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * (k % p_) % p_;
    return ZpPoly(p_, std::move(c));
  }

  // base^e mod m, with e given as a big integer
  static ZpPoly powmod(ZpPoly base, const mpz_class& e, const ZpPoly& m) {
    ZpPoly r(m.p_, {1});
    r = r % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = (r * r) % m;
      if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_;
  std::vector<Coeff> c_;
};

// Monic gcd over Z/pZ.
inline ZpPoly gcd(ZpPoly a, ZpPoly b) {
  while (!b.is_zero()) {
    ZpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// True iff f mod p keeps its degree and is squarefree over Z/pZ.
inline bool squarefree_mod(const IntPoly& f, std::uint64_t p) {
  const ZpPoly fp = ZpPoly::reduce(f, p);
  if (fp.degree() != f.degree()) return false;
  const ZpPoly dp = fp.derivative();
  if (dp.is_zero()) return false;
  return gcd(fp, dp).degree() == 0;
}

// Sound squarefree certificate: a squarefree reduction modulo a prime not
// dividing the leading coefficient forces a nonzero discriminant over Q.
// Falls back to the exact gcd when the first primes below 10^4 all fail.
inline bool squarefree_fast(const IntPoly& f) {
  if (f.degree() < 1) return true;
  int tries = 0;
  for (std::uint32_t p : primes_below(10000)) {
    if (p <= static_cast<std::uint32_t>(f.degree())) continue;  // avoid p | k in derivative coefficients
    if (squarefree_mod(f, p)) return true;
    if (++tries == 20) break;
  }
  return exact_gcd(f, derivative(f)).degree() == 0;
}

// Sound coprimality certificate: if p keeps both degrees, the rational gcd
// reduces to a divisor of the modular gcd of the same degree.
inline bool coprime_fast(const IntPoly& a, const IntPoly& b) {
  int tries = 0;
  for (std::uint32_t p : primes_below(10000)) {
    const ZpPoly ap = ZpPoly::reduce(a, p), bp = ZpPoly::reduce(b, p);
    if (ap.degree() != a.degree() || bp.degree() != b.degree()) continue;
    if (gcd(ap, bp).degree() == 0) return true;
    if (++tries == 20) break;
  }
  return exact_gcd(a, b).degree() == 0;
}

}  // namespace gonchar

#endif  // GONCHAR_ZP_HPP
