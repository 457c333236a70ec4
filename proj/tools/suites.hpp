// Property suites behind `gonchar verify`.
#ifndef GONCHAR_TOOLS_SUITES_HPP
#define GONCHAR_TOOLS_SUITES_HPP

#include <array>
#include <cmath>
#include <functional>
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

namespace gonchar::suites {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Check {
  const char* name;
  std::function<std::string()> run;  // empty string: pass; otherwise the failure detail
};

inline const mp::Real& tol30() {
  static const mp::Real t("1e-30", 256);
  return t;
}

inline std::vector<Check> poly_checks() {
  return {
      {"published forms d = 1..8, 12",
       [] {
         for (const auto& f : reference::published_forms())
           if (gonchar_poly(f.d) != reference::expand(f)) return "mismatch at d = " + std::to_string(f.d);
         return std::string();
       }},
      {"reciprocity laws d <= 60",
       [] {
         for (int d = 1; d <= 60; ++d) {
           const IntPoly g = gonchar_poly(d);
           // even d: G* = G; odd d: G + G* = -2 (z^d + z^(d-1))
           const IntPoly odd_rhs = (IntPoly{-2} * IntPoly{1, 1}).shifted(static_cast<std::size_t>(d - 1));
           if (d % 2 == 0 ? reciprocal(g) != g : g + reciprocal(g) != odd_rhs) return "d = " + std::to_string(d);
         }
         return std::string();
       }},
      {"derivative identity at random rationals d <= 50",
       [] {
         std::mt19937_64 rng(0xd0d0);
         std::uniform_int_distribution<long> num(-300, 300), den(1, 61);
         for (int d = 1; d <= 50; ++d) {
           const IntPoly g = gonchar_poly(d), dg = derivative(g);
           for (int k = 0; k < 5; ++k) {
             const RatQ z = make_rat(num(rng), den(rng));
             RatQ zd = 1, zm1d = 1;
             for (int i = 0; i < d; ++i) {
               zd *= z;
               zm1d *= z - 1;
             }
             const RatQ rhs = RatQ(d - 1) * zm1d * (zd + 1) + 2 * zd + (RatQ(d) * z - d + 1) * eval_exact(g, z);
             if (z * (z - 1) * eval_exact(dg, z) != rhs) return "d = " + std::to_string(d);
           }
         }
         return std::string();
       }},
      {"divisibility laws d <= 120",
       [] {
         for (int d = 1; d <= 120; ++d) {
           const Divisibility v = known_divisibility(d);
           if (v.divides_z_plus_1 != (d % 2 == 0) || v.divides_cyclotomic != (d % 6 == 0))
             return "d = " + std::to_string(d);
         }
         return std::string();
       }},
      {"q = 1 instance equals G(d;z) d <= 40",
       [] {
         for (int d = 1; d <= 40; ++d)
           if (gonchar_poly_q(d, RatQ(1)).poly != gonchar_poly(d)) return "d = " + std::to_string(d);
         return std::string();
       }},
  };
}

inline std::string near_reference(const RootApprox& r, const char* ref) {
  const mp::Real diff = mp::abs(r.value - mp::Real(ref, 256));
  if (diff <= r.radius + mp::Real("1e-38", 256)) return {};
  return "got " + mp::to_decimal(r.value, 35);
}

inline std::vector<Check> roots_checks() {
  return {
      {"rho(2) golden ratio", [] { return near_reference(rho(2, tol30()), reference::kRho2); }},
      {"rho(4) plastic number", [] { return near_reference(rho(4, tol30()), reference::kRho4); }},
      {"R_1(1) = 3 exactly",
       [] {
         const RootApprox r = critical_distance(1, RatQ(1), tol30());
         return r.exact && *r.exact == 3 ? std::string() : std::string("not flagged exact 3");
       }},
      {"real-root structure d <= 40",
       [] {
         for (int d = 1; d <= 40; ++d) {
           const RealRoots r = isolate_real_roots(gonchar_poly(d));
           const auto in = [](const Interval& iv, RatQ lo, RatQ hi) { return iv.lo >= lo && iv.hi <= hi; };
           bool ok;
           if (d == 1) {
             ok = r.exact == std::vector<RatQ>{RatQ(3)} && r.isolating.empty();
           } else if (d % 2 != 0) {
             ok = r.exact.empty() && r.isolating.size() == 1 && in(r.isolating[0], 2, 3);
           } else {
             ok = r.exact == std::vector<RatQ>{RatQ(-1)} && r.isolating.size() == 2 &&
                  in(r.isolating[0], RatQ(1, 3), RatQ(1, 2)) && in(r.isolating[1], 2, 3);
           }
           if (!ok) return "d = " + std::to_string(d);
         }
         return std::string();
       }},
      {"R_1 strictly decreasing in (2, 3) for d = 2..60",
       [] {
         mp::Real prev_lo(3L, 256);  // certified lower end of the previous R_1
         for (int d = 2; d <= 60; ++d) {
           const RootApprox r = critical_distance(d, RatQ(1), tol30());
           if (!(r.value - r.radius > 2.0) || !(r.value + r.radius < prev_lo)) return "d = " + std::to_string(d);
           prev_lo = r.value - r.radius;
         }
         return std::string();
       }},
  };
}

inline std::vector<Check> factors_checks() {
  return {
      {"all zeros simple d <= 40",
       [] {
         for (int d = 1; d <= 40; ++d)
           if (!certify_all_simple(gonchar_poly(d))) return "d = " + std::to_string(d);
         return std::string();
       }},
      {"reducible only for d = 4, 8, 12 (d <= 40)",
       [] {
         const auto& table = exceptional_factorizations();
         for (int d = 1; d <= 40; ++d) {
           const IrredVerdict v = irreducibility_certificate(reduced_polynomial(d));
           const bool exceptional = d == 4 || d == 8 || d == 12;
           if (exceptional != (v.status == IrredStatus::Reducible)) return "d = " + std::to_string(d);
           if (exceptional) {
             for (const auto& e : table) {
               if (e.d != d) continue;
               IntPoly prod{1};
               for (const auto& w : v.witnesses) prod = prod * w;
               if (prod != reduced_polynomial(d)) return "witness product at d = " + std::to_string(d);
               for (const auto& w : v.witnesses)
                 if (std::find(e.factors.begin(), e.factors.end(), w) == e.factors.end())
                   return "witness not in table at d = " + std::to_string(d);
             }
           }
         }
         return std::string();
       }},
  };
}

inline std::vector<Check> geometry_checks() {
  return {
      {"census rows d = 1..12 and 42",
       [] {
         for (const auto& row : reference::kCensusRows) {
           const Census c = census(row.d, tol30());
           if (c.N1 != row.n1 || c.N2 != row.n2 || c.N3 != row.n3 || c.has_intersection_pair != (row.d % 6 == 0))
             return "d = " + std::to_string(row.d);
         }
         return std::string();
       }},
      {"census sum law d <= 40",
       [] {
         for (int d = 1; d <= 40; ++d) {
           const Census c = census(d, tol30());
           if (c.N1 + c.N2 + c.N3 + 2 * (d % 6 == 0 ? 1 : 0) != 2 * d - 1) return "d = " + std::to_string(d);
         }
         return std::string();
       }},
      {"theta solution counts even d <= 40",
       [] {
         for (int d = 2; d <= 40; d += 2)
           if (theta_solutions(d, tol30()).on_circle_count() != expected_on_circle(d)) return "d = " + std::to_string(d);
         return std::string();
       }},
      {"no unit-circle zeros for odd d <= 39",
       [] {
         for (int d = 1; d <= 39; d += 2)
           if (!unit_circle_free_certificate(d)) return "d = " + std::to_string(d);
         return std::string();
       }},
      {"distance to Gamma smaller at d = 40 than at d = 10",
       [] {
         const mp::Real a = max_gamma_distance(10, tol30()), b = max_gamma_distance(40, tol30());
         return b < a ? std::string() : "d=10: " + mp::to_decimal(a, 10) + ", d=40: " + mp::to_decimal(b, 10);
       }},
  };
}

inline std::vector<Check> equilibrium_checks() {
  return {
      {"total mass one on the grid",
       [] {
         for (int d : {2, 3, 4, 8})
           for (double R : {1.05, 1.5, 2.0, 5.0})
             for (double q : {0.5, 1.0, 3.0})
               if (std::abs(total_mass(R, q, d) - 1.0) > 1e-10)
                 return "d = " + std::to_string(d) + ", R = " + std::to_string(R) + ", q = " + std::to_string(q);
         return std::string();
       }},
      {"density vanishes at the pole for R = R_q, d <= 20",
       [] {
         for (int d = 1; d <= 20; ++d)
           for (const RatQ& q : {RatQ(1, 2), RatQ(1), RatQ(3)}) {
             const double R = critical_distance(d, q, tol30()).value.to_double();
             if (std::abs(density(0.0, R, q.get_d(), d)) > 1e-10) return "d = " + std::to_string(d);
           }
         return std::string();
       }},
      {"weighted potential constant for d = 2",
       [] {
         const std::array<double, 3> pts{std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4};
         for (double R : {1.5, 2.0, 3.0}) {
           const double r = weighted_potential_residual(R, 1.0, pts);
           if (!(r < 1e-6)) return "R = " + std::to_string(R) + ": residual " + std::to_string(r);
         }
         return std::string();
       }},
      {"C_d forms agree d = 2..20",
       [] {
         for (int d = 2; d <= 20; ++d) {
           const CdForms f = c_d_forms(d);
           if (std::abs(f.gamma_form / f.omega_form - 1.0) > 1e-12) return "d = " + std::to_string(d);
         }
         return std::string();
       }},
  };
}

inline const std::array<const char*, 5>& suite_names() {
  static const std::array<const char*, 5> names{"poly", "roots", "factors", "geometry", "equilibrium"};
  return names;
}

inline std::vector<Check> checks_for(const std::string& suite) {
  if (suite == "poly") return poly_checks();
  if (suite == "roots") return roots_checks();
  if (suite == "factors") return factors_checks();
  if (suite == "geometry") return geometry_checks();
  if (suite == "equilibrium") return equilibrium_checks();
  return {};
}

// Numeric failures propagate; a thrown logic_error counts as a failed check.
inline std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  for (const auto& name : suite_names()) {
    if (suite != "all" && suite != name) continue;
    for (const auto& c : checks_for(name)) {
      CheckResult r{name, c.name, false, {}};
      try {
        r.detail = c.run();
        r.pass = r.detail.empty();
      } catch (const std::logic_error& e) {
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace gonchar::suites

#endif  // GONCHAR_TOOLS_SUITES_HPP
