#pragma once

#include <cstdint>
#include <random>

#include "cuspidal/mixed_polynomial.hpp"

namespace cuspidal::testing {

// Small-integer coefficients keep sums and products exact in doubles, so
// algebraic identities can be compared with ==.
inline MixedPolynomial random_mixed(std::mt19937_64& rng, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, static_cast<int>(max_deg));
  MixedPolynomial g;
  for (int k = 0; k < terms; ++k) {
    const auto p = static_cast<std::uint32_t>(deg(rng));
    const auto q = static_cast<std::uint32_t>(deg(rng));
    if (p + q > max_deg) continue;
    g = g + MixedPolynomial::monomial({double(coef(rng)), double(coef(rng))}, p, q);
  }
  return g;
}

inline MixedPolynomial random_holomorphic(std::mt19937_64& rng, unsigned min_deg,
                                          unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(min_deg, max_deg);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const unsigned n = deg(rng);
  MixedPolynomial f = MixedPolynomial::monomial(1.0, n, 0);
  for (unsigned p = 1; p < n; ++p) f = f + MixedPolynomial::monomial({coef(rng), coef(rng)}, p, 0);
  return f;
}

inline ComplexPoint random_point(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  return {u(rng), u(rng)};
}

}  // namespace cuspidal::testing
