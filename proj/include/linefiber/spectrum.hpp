#pragma once

// Closed-form spectrum of a triple-point line arrangement from (d, n3)
// alone. For alpha = j/d with 1 <= j <= d the three coefficients n_alpha,
// n_{alpha+1}, n_{alpha+2} are
//
//   n_alpha     = C(j-1, 2)        - n3 * C(c-1, 2)
//   n_{alpha+1} = (j-1)(d-j-1)     - n3 * (c-1)(3-c)
//   n_{alpha+2} = C(d-j-1, 2)      - n3 * C(3-c, 2)   - [j == d]
//
// with c = ceil(3j/d) and C(n,2) = 0 for every n < 2 (negative included, as
// the j = d block forces). Exponents are exact rationals throughout.

#include <array>
#include <map>
#include <stdexcept>

#include <linefiber/numeric.hpp>
#include <linefiber/rational.hpp>

namespace linefiber {

struct SpectrumPoly {
  std::map<Rational, long long> terms;  // exponent in (0, 3] -> coefficient, zeros omitted

  long long coeff(const Rational& alpha) const {
    const auto it = terms.find(alpha);
    return it == terms.end() ? 0 : it->second;
  }
  friend bool operator==(const SpectrumPoly&, const SpectrumPoly&) = default;
};

inline std::array<long long, 3> n_alpha_block(int j, int d, long long n3) {
  if (d < 2 || j < 1 || j > d)
    throw std::invalid_argument("n_alpha_block: need d >= 2 and 1 <= j <= d");
  if (n3 < 0) throw std::invalid_argument("n_alpha_block: n3 must be non-negative");
  const long long c = ceil_div(3LL * j, d);
  const long long delta = j == d ? 1 : 0;
  return {
      binom2(j - 1) - n3 * binom2(c - 1),
      (j - 1LL) * (d - j - 1LL) - n3 * (c - 1) * (3 - c),
      binom2(d - j - 1LL) - n3 * binom2(3 - c) - delta,
  };
}

inline SpectrumPoly spectrum(int d, long long n3) {
  SpectrumPoly sp;
  for (int j = 1; j <= d; ++j) {
    const auto block = n_alpha_block(j, d, n3);
    for (int s = 0; s < 3; ++s)
      if (block[s] != 0) sp.terms.emplace(make_fraction(j + static_cast<long long>(s) * d, d), block[s]);
  }
  return sp;
}

}  // namespace linefiber
