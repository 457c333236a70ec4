#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "gonchar/equilibrium.hpp"
#include "gonchar/rootkit_real.hpp"

namespace gonchar {
namespace {

constexpr double pi = std::numbers::pi;

TEST(UniformPotential, Examples) {
  EXPECT_EQ(uniform_potential(0.5, 3), 1.0);
  EXPECT_EQ(uniform_potential(2.0, 2), 0.5);
  EXPECT_EQ(uniform_potential(1.0, 7), 1.0);
  EXPECT_THROW(uniform_potential(-1.0, 2), DomainError);
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density(0.0, 2.0, 1.0, 2), -1.5);
  for (double t : {0.0, 1.0, pi}) EXPECT_NEAR(density(t, 1e6, 1.0, 2), 1.0, 1e-5);
  // minimum at the pole: 1 + q/R^(d-1) - q (R+1)/(R-1)^d
  EXPECT_DOUBLE_EQ(density(0.0, 3.0, 0.5, 4), 1.0 + 0.5 / 27.0 - 0.5 * 4.0 / 16.0);
  EXPECT_THROW(density(0.0, 1.0, 1.0, 2), DomainError);
}

TEST(Density, NondecreasingInPolarAngle) {
  for (int d : {1, 2, 3, 4, 8, 20})
    for (double R : {1.01, 1.5, 2.0, 5.0})
      for (double q : {0.5, 1.0, 3.0}) EXPECT_TRUE(density_profile(R, q, d).nondecreasing()) << d << ' ' << R << ' ' << q;
}

TEST(TotalMass, Examples) {
  EXPECT_NEAR(total_mass(2.0, 1.0, 2), 1.0, 1e-10);
  EXPECT_NEAR(total_mass(1.01, 1.0, 4), 1.0, 1e-10);
  EXPECT_NEAR(total_mass(10.0, 0.5, 3), 1.0, 1e-10);
}

TEST(TotalMass, Grid) {
  for (int d : {2, 3, 4, 8})
    for (double R : {1.05, 1.5, 2.0, 5.0})
      for (double q : {0.5, 1.0, 3.0}) EXPECT_NEAR(total_mass(R, q, d), 1.0, 1e-10) << d << ' ' << R << ' ' << q;
}

TEST(WeightNormalization, IntegratesToOne) {
  // total_mass with a vanishing charge reduces to the weight integral
  for (int d : {1, 2, 5, 9}) EXPECT_NEAR(total_mass(3.0, 1e-300, d), 1.0, 1e-12) << d;
}

TEST(PositiveCap, ClosedFormAtTwo) {
  const CapReport c = positive_cap(2.0, 1.0, 2);
  // s = 2^(1/3), cos t0 = (5 - 2^(2/3)) / 4
  EXPECT_NEAR(std::cos(c.t0), 0.85314973700795013131, 1e-13);
  ASSERT_TRUE(c.t0_closed_form.has_value());
  EXPECT_NEAR(*c.t0_closed_form, c.t0, 1e-12);
  EXPECT_GE(c.positive_mass, 1.0);
  EXPECT_NEAR(density(c.t0, 2.0, 1.0, 2), 0.0, 1e-12);
}

TEST(PositiveCap, AtOrBeyondCriticalDistance) {
  const CapReport c = positive_cap(3.0, 1.0, 2);  // R_1(2) = 2.618...
  EXPECT_EQ(c.t0, 0.0);
  EXPECT_EQ(c.positive_mass, 1.0);
  for (int d : {3, 5, 8})
    for (double R : {1.05, 1.3, 1.8}) {
      const CapReport r = positive_cap(R, 1.0, d);
      EXPECT_GT(r.t0, 0.0);
      EXPECT_GE(r.positive_mass, 1.0);
    }
}

TEST(CriticalDistance, DensityVanishesAtPole) {
  for (int d = 1; d <= 20; ++d)
    for (const RatQ& q : {RatQ(1, 2), RatQ(1), RatQ(3)}) {
      const double R = critical_distance(d, q, mp::Real("1e-30", 256)).value.to_double();
      const double qd = q.get_d();
      EXPECT_NEAR(density(0.0, R, qd, d), 0.0, 1e-10) << d << ' ' << qd;
      // sign law on either side of R_q
      EXPECT_LT(density(0.0, R * (1 - 1e-6), qd, d), 0.0);
      EXPECT_GT(density(0.0, R * (1 + 1e-6), qd, d), 0.0);
    }
}

TEST(WeightedPotential, ConstantOnSphere) {
  const std::array<double, 3> pts{pi / 4, pi / 2, 3 * pi / 4};
  EXPECT_LT(weighted_potential_residual(2.0, 1.0, pts), 1e-6);
  EXPECT_LT(weighted_potential_residual(3.0, 1.0, pts), 1e-6);
  EXPECT_LT(weighted_potential_residual(1.5, 1.0, pts), 1e-6);
  EXPECT_LT(weighted_potential_residual(2.0, 1e-8, pts), 1e-6);
  EXPECT_NEAR(weighted_potential_d2(pi / 2, 2.0, 1e-8), 1.0, 1e-6);
}

TEST(WeightedPotential, PolesIncluded) {
  const std::array<double, 2> pts{0.0, pi};
  EXPECT_LT(weighted_potential_residual(2.0, 1.0, pts), 1e-6);
}

TEST(Cd, Examples) {
  EXPECT_NEAR(c_d(2) / (pi * pi * pi), 1.0, 1e-12);
  EXPECT_NEAR(c_d(3) / (4 * pi * pi), 1.0, 1e-12);
  EXPECT_NEAR(c_d(2), 31.006276680299820175, 1e-10);
  EXPECT_NEAR(c_d(3), 39.478417604357434475, 1e-10);
  for (int d = 2; d <= 20; ++d) {
    const CdForms f = c_d_forms(d);
    EXPECT_NEAR(f.gamma_form / f.omega_form, 1.0, 1e-12) << d;
  }
  EXPECT_THROW(c_d(1), DomainError);
}

}  // namespace
}  // namespace gonchar
