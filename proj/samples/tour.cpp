// Walks through the library: critical distances, zero regions, factor verdicts, equilibrium.
#include <cstdio>

#include "gonchar/equilibrium.hpp"
#include "gonchar/factorlab.hpp"
#include "gonchar/rootkit_real.hpp"
#include "gonchar/zerogeom.hpp"

int main() {
  using namespace gonchar;
  const mp::Real tol("1e-40", 256);

  std::puts("R_1(d) against 2 + ln(3)/d");
  for (int d : {2, 5, 10, 50, 200}) {
    const RootApprox r = critical_distance(d, RatQ(1), tol);
    std::printf("  d = %3d  R_1 = %s  estimate = %s\n", d, mp::to_decimal(r.value, 25).c_str(),
                mp::to_decimal(asymptotic_estimate(d, RatQ(1)), 25).c_str());
  }

  const int d = 12;
  const ClassifiedZeros cz = classify_zeros(d, tol);
  const Census c = census_of(cz);
  std::printf("\nzeros of G(%d;z): A1 %d, A2 %d, A3 %d, on the unit circle %d, at e^(+-i pi/3) %s\n", d, c.N1, c.N2,
              c.N3, c.on_circle, c.has_intersection_pair ? "yes" : "no");
  for (std::size_t i = 0; i < cz.zeros.zeros.size(); ++i) {
    const ZeroDisk& z = cz.zeros.zeros[i];
    std::printf("  %+.12f %+.12fi  %s\n", z.value.re.to_double(), z.value.im.to_double(), to_string(cz.regions[i]));
  }

  std::puts("\nirreducibility of G(d;z) / ell(d;z)");
  for (int k : {4, 5, 6, 8, 9}) {
    const IrredVerdict v = irreducibility_certificate(reduced_polynomial(k));
    std::printf("  d = %d  %s after %zu primes\n", k, to_string(v.status), v.primes_used.size());
  }

  const double R = critical_distance(3, RatQ(1), tol).value.to_double();
  std::printf("\nd = 3, q = 1, R = R_1: density at the pole %.2e, total mass %.15f\n", density(0.0, R, 1.0, 3),
              total_mass(R, 1.0, 3));
  const CapReport cap = positive_cap(1.2, 1.0, 3);
  std::printf("d = 3, q = 1, R = 1.2: density changes sign at t0 = %.12f, positive mass %.12f\n", cap.t0,
              cap.positive_mass);
  return 0;
}
