// Acceptance suite: one [PASS]/[FAIL] line per criterion; exit status 0 only if all pass.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gonchar/equilibrium.hpp"
#include "gonchar/factorlab.hpp"
#include "gonchar/reference_values.hpp"
#include "gonchar/rootkit_complex.hpp"
#include "gonchar/rootkit_real.hpp"
#include "gonchar/zerogeom.hpp"

namespace {

using namespace gonchar;
using mp::Real;

// Tolerances and budgets pinned per criterion.
constexpr double kRhoTol = 1e-12;          // 1, 2
constexpr double kRhoSeconds = 1.0;        // 1, 2
constexpr int kDivisibilityMaxD = 300;     // 5
constexpr double kDivisibilitySeconds = 30.0;
constexpr int kRealStructureMaxD = 150;    // 6
constexpr int kSimpleMaxD = 100;           // 7
constexpr int kGeometryMaxD = 100;         // 8, 9
constexpr int kMonotoneMaxD = 200;         // 10
constexpr int kAsymMinD = 50, kAsymMaxD = 400;
constexpr double kAsymK = 1.0;             // oracle-pinned bound on |R_1 - 2 - ln3/d| d^2
constexpr double kMassTol = 1e-10;         // 11
constexpr double kPoleTol = 1e-10;
constexpr double kPotentialTol = 1e-6;     // 12
constexpr double kPotentialSeconds = 60.0;
constexpr double kCdRelTol = 1e-12;        // 13
constexpr int kFactorMaxD = 60;            // 14
constexpr int kIdentityMaxD = 50;          // 16
constexpr int kIdentityPoints = 5;

const Real& tol30() {
  static const Real t("1e-30", 256);
  return t;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Zero classifications shared by criteria 8 and 9.
const ClassifiedZeros& classified(int d) {
  static std::map<int, ClassifiedZeros> cache;
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, classify_zeros(d, tol30())).first;
  return it->second;
}

Outcome rho_against(int d, const char* ref, const std::function<Real()>& second_form) {
  const auto t0 = std::chrono::steady_clock::now();
  const RootApprox r = rho(d, tol30());
  const double secs = seconds_since(t0);
  const Real diff = mp::abs(r.value - Real(ref, 256));
  const Real diff2 = mp::abs(r.value - second_form());
  const bool ok = diff <= kRhoTol && diff2 <= kRhoTol && secs < kRhoSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "rho = %s, |diff| = %.2e, |diff to closed form| = %.2e, %.3f s",
                mp::to_decimal(r.value, 20).c_str(), diff.to_double(), diff2.to_double(), secs);
  return {ok, buf};
}

Outcome c1() {
  return rho_against(2, reference::kRho2, [] { return (Real(1L, 256) + mp::sqrt(Real(5L, 256))) / 2L; });
}

Outcome c2() {
  // ((9 - sqrt69)^(1/3) + (9 + sqrt69)^(1/3)) / (2^(1/3) 3^(2/3))
  return rho_against(4, reference::kRho4, [] {
    const Real s = mp::sqrt(Real(69L, 256));
    const Real num = mp::cbrt(Real(9L, 256) - s) + mp::cbrt(Real(9L, 256) + s);
    return num / (mp::cbrt(Real(2L, 256)) * mp::cbrt(Real(9L, 256)));
  });
}

Outcome c3() {
  const RootApprox r = critical_distance(1, RatQ(1), tol30());
  const bool ok = r.exact.has_value() && *r.exact == 3 && r.radius.is_zero();
  return {ok, ok ? "R_1(1) = 3/1 exact" : "not reported as exact 3"};
}

Outcome c4() {
  for (const auto& f : reference::published_forms())
    if (gonchar_poly(f.d) != reference::expand(f)) return {false, "mismatch at d = " + std::to_string(f.d)};
  return {true, "d = 1..8, 12 equal coefficient by coefficient"};
}

Outcome c5() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int d = 1; d <= kDivisibilityMaxD; ++d) {
    const Divisibility v = known_divisibility(d);
    if (v.divides_z_plus_1 != (d % 2 == 0)) return {false, "(z+1) law fails at d = " + std::to_string(d)};
    if (v.divides_cyclotomic != (d % 6 == 0)) return {false, "(z^2-z+1) law fails at d = " + std::to_string(d)};
  }
  const double secs = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "d <= %d, %.2f s", kDivisibilityMaxD, secs);
  return {secs < kDivisibilitySeconds, buf};
}

Outcome c6() {
  const auto in = [](const Interval& iv, const RatQ& lo, const RatQ& hi) { return iv.lo >= lo && iv.hi <= hi; };
  for (int d = 1; d <= kRealStructureMaxD; ++d) {
    const RealRoots r = isolate_real_roots(gonchar_poly(d));
    bool ok;
    if (d % 2 != 0) {
      // one real root in (2, 3]; d = 1 has the rational root 3
      ok = r.exact.size() + r.isolating.size() == 1 &&
           (r.exact.empty() ? in(r.isolating[0], RatQ(2), RatQ(3)) : r.exact[0] > 2 && r.exact[0] <= 3);
    } else {
      ok = r.exact == std::vector<RatQ>{RatQ(-1)} && r.isolating.size() == 2 &&
           in(r.isolating[0], RatQ(1, 3), RatQ(1, 2)) && in(r.isolating[1], RatQ(2), RatQ(3));
    }
    if (!ok) return {false, "structure differs at d = " + std::to_string(d)};
  }
  return {true, "d <= " + std::to_string(kRealStructureMaxD) + " (Sturm isolation, exact)"};
}

Outcome c7() {
  for (int d = 1; d <= kSimpleMaxD; ++d)
    if (!certify_all_simple(gonchar_poly(d))) return {false, "gcd(G, G') nonconstant at d = " + std::to_string(d)};
  return {true, "gcd(G, G') = 1 for d <= " + std::to_string(kSimpleMaxD)};
}

Outcome c8() {
  const Real half("0.5", 256), slack("1e-60", 256);
  for (int d = 2; d <= kGeometryMaxD; d += 2) {
    const ClassifiedZeros& cz = classified(d);
    const ThetaSolutionSet& th = *cz.theta;
    if (th.on_circle_count() != expected_on_circle(d))
      return {false, "count " + std::to_string(th.on_circle_count()) + " at d = " + std::to_string(d)};
    for (const auto& t : th.thetas) {
      // |d cos / d theta| <= 1, so cos over the enclosure is at most cos(value) + radius
      if (!(mp::cos(t.value) - t.radius <= half + slack)) return {false, "Re > 1/2 at d = " + std::to_string(d)};
      for (bool upper : {true, false}) {
        int hits = 0;
        for (const auto& z : cz.zeros.zeros) hits += detail::theta_disk_meets(z, t, upper) ? 1 : 0;
        if (hits != 1) return {false, "disk match count " + std::to_string(hits) + " at d = " + std::to_string(d)};
      }
    }
  }
  for (int d = 1; d < kGeometryMaxD; d += 2)
    if (!unit_circle_free_certificate(d)) return {false, "odd d = " + std::to_string(d) + " not certified"};
  return {true, "even d <= 100 counts, Re <= 1/2 and disk matches; odd d <= 99 certified circle-free"};
}

Outcome c9() {
  for (const auto& row : reference::kCensusRows) {
    const Census c = census_of(classified(row.d));
    if (c.N1 != row.n1 || c.N2 != row.n2 || c.N3 != row.n3 || c.has_intersection_pair != (row.d % 6 == 0)) {
      return {false, "row d = " + std::to_string(row.d) + " got (" + std::to_string(c.N1) + "," +
                         std::to_string(c.N2) + "," + std::to_string(c.N3) + ")"};
    }
  }
  for (int d = 1; d <= kGeometryMaxD; ++d) {
    const Census c = census_of(classified(d));
    const int delta = d % 6 == 0 ? 1 : 0;
    if (c.N1 + c.N2 + c.N3 + 2 * delta != 2 * d - 1) return {false, "sum law fails at d = " + std::to_string(d)};
  }
  return {true, "rows d = 1..12, 42 match; sum law for d <= 100"};
}

Outcome c10() {
  std::vector<int> ds;
  for (int d = 2; d <= kMonotoneMaxD; ++d) ds.push_back(d);
  const MonotoneReport m = xi_monotone_check(ds, tol30());
  const RootApprox& first = m.table.front().second;
  const bool in_range = first.value + first.radius < 3.0;
  if (!m.ok() || !in_range) return {false, "R_1 not certified strictly decreasing inside (2, 3)"};
  std::vector<int> big;
  for (int d = kAsymMinD; d <= kAsymMaxD; ++d) big.push_back(d);
  double worst = 0.0;
  int worst_d = 0;
  for (const auto& row : residual_scan(RatQ(1), big, tol30())) {
    const double v = std::abs(row.scaled.to_double());
    if (v > worst) {
      worst = v;
      worst_d = row.d;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "decreasing in (2, 3) for d = 2..%d; max |R_1 - 2 - ln3/d| d^2 = %.5f at d = %d (K = %.1f)",
                kMonotoneMaxD, worst, worst_d, kAsymK);
  return {worst <= kAsymK, buf};
}

Outcome c11() {
  double worst_mass = 0.0;
  for (int d : {2, 3, 4, 8})
    for (double R : {1.05, 1.5, 2.0, 5.0})
      for (double q : {0.5, 1.0, 3.0}) worst_mass = std::max(worst_mass, std::abs(total_mass(R, q, d) - 1.0));
  double worst_pole = 0.0;
  for (int d = 1; d <= 20; ++d)
    for (const RatQ& q : {RatQ(1, 2), RatQ(1), RatQ(3)}) {
      const double R = critical_distance(d, q, tol30()).value.to_double();
      worst_pole = std::max(worst_pole, std::abs(density(0.0, R, q.get_d(), d)));
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |mass - 1| = %.2e, max |density(0, R_q)| = %.2e", worst_mass, worst_pole);
  return {worst_mass <= kMassTol && worst_pole <= kPoleTol, buf};
}

Outcome c12() {
  const auto t0 = std::chrono::steady_clock::now();
  const double pi = std::numbers::pi;
  const std::array<double, 5> pts{0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
  double worst = 0.0;
  for (double R : {1.5, 2.0, 3.0}) worst = std::max(worst, weighted_potential_residual(R, 1.0, pts));
  const double secs = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.2e, %.2f s", worst, secs);
  return {worst < kPotentialTol && secs < kPotentialSeconds, buf};
}

Outcome c13() {
  const double pi = std::numbers::pi;
  const double e2 = std::abs(c_d(2) / (pi * pi * pi) - 1.0);
  const double e3 = std::abs(c_d(3) / (4 * pi * pi) - 1.0);
  double worst = 0.0;
  for (int d = 2; d <= 20; ++d) {
    const CdForms f = c_d_forms(d);
    worst = std::max(worst, std::abs(f.gamma_form / f.omega_form - 1.0));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "rel err C_2 %.1e, C_3 %.1e, forms %.1e", e2, e3, worst);
  return {e2 <= kCdRelTol && e3 <= kCdRelTol && worst <= kCdRelTol, buf};
}

Outcome c14() {
  int certified = 0, inconclusive = 0;
  for (int d = 1; d <= kFactorMaxD; ++d) {
    const IntPoly reduced = reduced_polynomial(d);
    const IrredVerdict v = irreducibility_certificate(reduced);
    const bool exceptional = d == 4 || d == 8 || d == 12;
    if (v.status == IrredStatus::Reducible) {
      if (!exceptional) return {false, "Reducible at d = " + std::to_string(d)};
      // witnesses multiply to the reduced polynomial and each is a published factor
      IntPoly prod{1};
      for (const auto& w : v.witnesses) prod = prod * w;
      if (prod != reduced) return {false, "witness product differs at d = " + std::to_string(d)};
      for (const auto& f : reference::published_forms()) {
        if (f.d != d) continue;
        for (const auto& w : v.witnesses)
          if (std::find(f.factors.begin(), f.factors.end(), w) == f.factors.end())
            return {false, "witness not published at d = " + std::to_string(d)};
      }
    } else if (exceptional) {
      return {false, "no factorization found at d = " + std::to_string(d)};
    } else if (v.status == IrredStatus::Certified) {
      ++certified;
    } else {
      ++inconclusive;
    }
  }
  return {true, "Reducible only at 4, 8, 12 with published witnesses; " + std::to_string(certified) +
                    " certified irreducible, " + std::to_string(inconclusive) + " inconclusive"};
}

Outcome c15() {
  const Real a = max_gamma_distance(10, tol30()), b = max_gamma_distance(40, tol30());
  return {b < a, "max distance to Gamma: d=10 " + mp::to_decimal(a, 8) + ", d=40 " + mp::to_decimal(b, 8)};
}

// Exact rational arithmetic throughout. The printed identity omits a multiple of G, so
// it is checked as a polynomial congruence mod G, and the full identity at random rationals.
Outcome c16() {
  std::mt19937_64 rng(0x5eed16);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 997);
  for (int d = 1; d <= kIdentityMaxD; ++d) {
    const IntPoly g = gonchar_poly(d), dg = derivative(g);
    IntPoly zm1d{1}, zd{1};
    for (int k = 0; k < d; ++k) {
      zm1d = zm1d * IntPoly{-1, 1};
      zd = zd * IntPoly{0, 1};
    }
    const IntPoly P = zm1d * (zd + IntPoly{1}) * IntPoly{d - 1} + zd * IntPoly{2};
    const IntPoly lhs = IntPoly{0, -1, 1} * dg;
    // lhs - P = (d z - d + 1) G exactly, hence lhs = P at every zero of G
    if (lhs - P != IntPoly{-(d - 1), d} * g) return {false, "congruence fails at d = " + std::to_string(d)};
    for (int k = 0; k < kIdentityPoints; ++k) {
      const RatQ z = make_rat(num(rng), den(rng));
      RatQ pz = 1, pzm1 = 1;
      for (int i = 0; i < d; ++i) {
        pz *= z;
        pzm1 *= z - 1;
      }
      const RatQ rhs = RatQ(d - 1) * pzm1 * (pz + 1) + 2 * pz + (RatQ(d) * z - d + 1) * eval_exact(g, z);
      if (z * (z - 1) * eval_exact(dg, z) != rhs) return {false, "rational point fails at d = " + std::to_string(d)};
    }
  }
  return {true, "d <= 50: identity exact mod G and with the (dz - d + 1) G term at 5 random rationals each"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "rho(2) golden ratio", c1},
      {2, "rho(4) plastic number", c2},
      {3, "critical distance d=1, q=1 is exactly 3", c3},
      {4, "expansion matches published forms", c4},
      {5, "divisibility laws d <= 300", c5},
      {6, "real-root structure d <= 150", c6},
      {7, "all zeros simple d <= 100", c7},
      {8, "theta solutions and on-circle zeros", c8},
      {9, "census rows and sum law", c9},
      {10, "R_1 monotone in (2, 3) and asymptotic bound", c10},
      {11, "equilibrium mass and critical-distance consistency", c11},
      {12, "constant weighted potential d = 2", c12},
      {13, "C_d closed forms", c13},
      {14, "factor verdicts d <= 60", c14},
      {15, "attraction to Gamma", c15},
      {16, "derivative identity", c16},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(all)) - failed, std::size(all));
  return failed == 0 ? 0 : 1;
}
