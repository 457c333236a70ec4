// Published reference values that the verification suites compare against.
#ifndef GONCHAR_REFERENCE_VALUES_HPP
#define GONCHAR_REFERENCE_VALUES_HPP

#include <array>
#include <initializer_list>
#include <vector>

#include "gonchar/polycore.hpp"

namespace gonchar::reference {

struct CensusRow {
  int d, n1, n2, n3;
};

// zero counts near C0 (N1), in the lens (N2) and near C1 (N3); d = 1..12 and 42
inline constexpr std::array<CensusRow, 13> kCensusRows{{{1, 0, 0, 1},
                                                        {2, 1, 1, 1},
                                                        {3, 2, 2, 1},
                                                        {4, 1, 3, 3},
                                                        {5, 2, 4, 3},
                                                        {6, 3, 3, 3},
                                                        {7, 4, 4, 5},
                                                        {8, 5, 5, 5},
                                                        {9, 6, 6, 5},
                                                        {10, 5, 7, 7},
                                                        {11, 6, 8, 7},
                                                        {12, 7, 7, 7},
                                                        {42, 27, 27, 27}}};

// rho(2): golden ratio; rho(4): plastic number
inline constexpr const char* kRho2 = "1.6180339887498948482045868343656381177203";
inline constexpr const char* kRho4 = "1.3247179572447460259609088544780973407344";

struct PublishedForm {
  int d;
  std::vector<IntPoly> factors;  // ascending coefficients; product is G(d;z)
};

// Factored or expanded forms of G(d;z) for d = 1..8 and 12.
inline std::vector<PublishedForm> published_forms() {
  const IntPoly zp1{1, 1}, cyc{1, -1, 1};
  return {
      {1, {IntPoly{-3, 1}}},
      {2, {zp1, IntPoly{1, -3, 1}}},
      {3, {IntPoly{-1, 3, -5, 3, -3, 1}}},
      {4, {zp1, IntPoly{-1, 2, -3, 1}, IntPoly{-1, 3, -2, 1}}},
      {5, {IntPoly{-1, 5, -10, 10, -7, 5, -10, 10, -5, 1}}},
      {6, {zp1, cyc, IntPoly{1, -6, 15, -21, 21, -21, 15, -6, 1}}},
      {7, {IntPoly{-1, 7, -21, 35, -35, 21, -9, 7, -21, 35, -35, 21, -7, 1}}},
      {8, {zp1, IntPoly{1, -3, 3, -3, 1}, IntPoly{1, -6, 16, -24, 24, -21, 24, -24, 16, -6, 1}}},
      {12,
       {zp1, cyc, IntPoly{1, -4, 5, -3, 5, -4, 1},
        IntPoly{1, -8, 29, -62, 85, -77, 48, -33, 48, -77, 85, -62, 29, -8, 1}}},
  };
}

inline IntPoly expand(const PublishedForm& f) {
  IntPoly r{1};
  for (const auto& p : f.factors) r = r * p;
  return r;
}

}  // namespace gonchar::reference

#endif  // GONCHAR_REFERENCE_VALUES_HPP
