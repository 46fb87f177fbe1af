#pragma once

// Equivariant mixed Hodge numbers h^{p,q}(H^j(F))_lambda of the Milnor fiber
// of a triple-point line arrangement, assembled from (d, n3, beta3) alone.
//
// Character convention: index k in {0, ..., d-1} stands for the eigenvalue
// lambda_k = exp(-2*pi*i*k/d), so the spectrum exponent j/d and the character
// index coincide, and the primitive cubic roots gamma, gamma' sit at
// k = d/3 and k = 2d/3. The monodromy-versus-action orientation is absorbed
// into this definition once; no operation takes an orientation flag.
//
// Layer by layer:
//   j = 0: the unit class, type (0,0) at k = 0.
//   j = 1: (1,1) with multiplicity d-1 at k = 0; weight-1 classes (0,1) at
//          gamma and (1,0) at gamma' with multiplicity beta3.
//   j = 2: (2,2) with multiplicity C(d-1,2) - n3 at k = 0; at a non-cubic
//          character pure weight 2 given by three consecutive spectrum
//          coefficients; at the cubic characters weights 2 and 3 mix and
//          beta3 enters with both signs.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <linefiber/arrangement.hpp>
#include <linefiber/errors.hpp>
#include <linefiber/numeric.hpp>
#include <linefiber/spectrum.hpp>

namespace linefiber {

struct HodgeKey {
  int p = 0, q = 0, j = 0;
  friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};

struct HodgeTable {
  int d = 0;
  // character k -> (p, q, j) -> multiplicity; zero multiplicities and empty
  // characters are never stored, so equality is structural equality.
  std::map<int, std::map<HodgeKey, long long>> by_char;

  long long mult(int k, HodgeKey key) const {
    const auto c = by_char.find(k);
    if (c == by_char.end()) return 0;
    const auto e = c->second.find(key);
    return e == c->second.end() ? 0 : e->second;
  }
  void add(int k, HodgeKey key, long long delta) {
    if (delta == 0) return;
    auto& slot = by_char[k][key];
    slot += delta;
    if (slot == 0) {
      by_char[k].erase(key);
      if (by_char[k].empty()) by_char.erase(k);
    }
  }
  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;
};

struct HdKey {
  int p = 0, q = 0;
  friend auto operator<=>(const HdKey&, const HdKey&) = default;
};

// The t = -1 specialization: signed coefficients per character.
struct HdPoly {
  int d = 0;
  std::map<int, std::map<HdKey, long long>> by_char;  // zeros omitted

  long long coeff(int k, HdKey key) const {
    const auto c = by_char.find(k);
    if (c == by_char.end()) return 0;
    const auto e = c->second.find(key);
    return e == c->second.end() ? 0 : e->second;
  }
  friend bool operator==(const HdPoly&, const HdPoly&) = default;
};

inline bool is_cubic_character(int k, int d) {
  return d % 3 == 0 && (k == d / 3 || k == 2 * d / 3);
}

// H^0 and H^1 layers.
inline HodgeTable h1_table(int d, long long beta3) {
  if (d < 2) throw std::invalid_argument("h1_table: need d >= 2");
  if (beta3 < 0) throw std::invalid_argument("h1_table: beta3 must be non-negative");
  if (beta3 != 0 && d % 3 != 0)
    throw HypothesisError("beta3 > 0 requires d divisible by 3");
  HodgeTable t;
  t.d = d;
  t.add(0, {0, 0, 0}, 1);
  t.add(0, {1, 1, 1}, d - 1);
  if (beta3 > 0) {
    t.add(d / 3, {0, 1, 1}, beta3);
    t.add(2 * d / 3, {1, 0, 1}, beta3);
  }
  return t;
}

// H^2 multiplicities (2,0), (1,1), (0,2) at a non-cubic character k = j:
// pure weight 2, equal to the spectrum coefficients n_{j/d}, n_{j/d+1},
// n_{j/d+2}.
inline std::array<long long, 3> h2_noncubic(int j, int d, long long n3) {
  if (j < 1 || j > d - 1) throw std::invalid_argument("h2_noncubic: need 1 <= j <= d-1");
  if (is_cubic_character(j, d))
    throw std::invalid_argument("h2_noncubic: cubic character routed to the wrong branch");
  return n_alpha_block(j, d, n3);
}

// H^2 multiplicities at gamma (k = d/3); the values at gamma' (k = 2d/3) are
// the (q,p)-mirror by complex conjugation.
struct CubicHodgeNumbers {
  long long h20 = 0, h11 = 0, h02 = 0, h21 = 0, h12 = 0;
};

inline CubicHodgeNumbers h2_cubic(int d, long long n3, long long beta3) {
  if (d % 3 != 0) throw HypothesisError("h2_cubic: d must be divisible by 3");
  const auto b = n_alpha_block(d / 3, d, n3);       // n at beta = 1/3, beta+1, beta+2
  const auto bp = n_alpha_block(2 * d / 3, d, n3);  // n at beta' = 2/3, beta'+1, beta'+2
  CubicHodgeNumbers h;
  h.h20 = bp[2];
  h.h11 = bp[2] + bp[1] - b[0] + beta3;
  h.h02 = bp[2] + bp[1] + bp[0] - b[0] - b[1] + beta3;
  h.h21 = b[0] - bp[2];
  h.h12 = b[1] + b[0] - bp[1] - bp[2] - beta3;
  for (const long long v : {h.h20, h.h11, h.h02, h.h21, h.h12})
    if (v < 0)
      throw HypothesisError(
          "negative Hodge multiplicity at a cubic character: (d, n3, beta3) = (" +
          std::to_string(d) + ", " + std::to_string(n3) + ", " + std::to_string(beta3) +
          ") is not realizable");
  return h;
}

// Checks the shape every arrangement-generated table must have.
inline void validate_arrangement_table(const HodgeTable& t) {
  if (t.d < 2) throw ConsistencyError("hodge table: d must be >= 2");
  for (const auto& [k, entries] : t.by_char) {
    if (k < 0 || k >= t.d) throw ConsistencyError("hodge table: character index out of range");
    for (const auto& [key, v] : entries) {
      const auto [p, q, j] = key;
      const std::string where = "character " + std::to_string(k) + ", (p,q,j) = (" +
                                std::to_string(p) + "," + std::to_string(q) + "," +
                                std::to_string(j) + ")";
      if (v <= 0) throw ConsistencyError("hodge table: non-positive multiplicity stored at " + where);
      if (p < 0 || p > 2 || q < 0 || q > 2 || j < 0 || j > 2)
        throw ConsistencyError("hodge table: index out of range at " + where);
      switch (j) {
        case 0:
          if (k != 0 || p != 0 || q != 0)
            throw ConsistencyError("hodge table: illegal H^0 entry at " + where);
          break;
        case 1: {
          const bool cubic = t.d % 3 == 0;
          const bool fixed = k == 0 && p == 1 && q == 1;
          const bool gamma = cubic && k == t.d / 3 && p == 0 && q == 1;
          const bool gammap = cubic && k == 2 * t.d / 3 && p == 1 && q == 0;
          if (!fixed && !gamma && !gammap)
            throw ConsistencyError("hodge table: illegal H^1 entry at " + where);
          break;
        }
        case 2:
          if (k == 0) {
            if (p != 2 || q != 2)
              throw ConsistencyError("hodge table: H^2 at the trivial character must be (2,2) at " +
                                     where);
          } else if (p + q == 3) {
            if (!is_cubic_character(k, t.d))
              throw ConsistencyError("hodge table: weight-3 H^2 entry at a non-cubic character at " +
                                     where);
          } else if (p + q != 2) {
            throw ConsistencyError("hodge table: H^2 weight outside {2, 3} at " + where);
          }
          break;
      }
    }
  }
}

// The full equivariant table from the three determining integers.
inline HodgeTable assemble_pd(int d, long long n3, long long beta3) {
  if (d < 2) throw std::invalid_argument("assemble_pd: need d >= 2");
  if (n3 < 0) throw std::invalid_argument("assemble_pd: n3 must be non-negative");
  if (beta3 < 0 || beta3 > 2) throw std::invalid_argument("assemble_pd: beta3 must lie in {0, 1, 2}");
  HodgeTable t = h1_table(d, beta3);
  const long long b2m = binom2(d - 1) - n3;
  if (b2m < 0)
    throw HypothesisError("assemble_pd: n3 exceeds C(d-1,2); not realizable with only double "
                          "and triple points");
  t.add(0, {2, 2, 2}, b2m);
  for (int k = 1; k <= d - 1; ++k) {
    if (is_cubic_character(k, d)) continue;
    const auto block = h2_noncubic(k, d, n3);
    const std::array<HodgeKey, 3> keys{HodgeKey{2, 0, 2}, HodgeKey{1, 1, 2}, HodgeKey{0, 2, 2}};
    for (int s = 0; s < 3; ++s) {
      if (block[s] < 0)
        throw HypothesisError("assemble_pd: negative multiplicity at character " +
                              std::to_string(k) + "; (d, n3) = (" + std::to_string(d) + ", " +
                              std::to_string(n3) + ") is not realizable");
      t.add(k, keys[s], block[s]);
    }
  }
  if (d % 3 == 0) {
    const CubicHodgeNumbers h = h2_cubic(d, n3, beta3);
    const int g = d / 3, gp = 2 * d / 3;
    t.add(g, {2, 0, 2}, h.h20);
    t.add(g, {1, 1, 2}, h.h11);
    t.add(g, {0, 2, 2}, h.h02);
    t.add(g, {2, 1, 2}, h.h21);
    t.add(g, {1, 2, 2}, h.h12);
    t.add(gp, {0, 2, 2}, h.h20);
    t.add(gp, {1, 1, 2}, h.h11);
    t.add(gp, {2, 0, 2}, h.h02);
    t.add(gp, {1, 2, 2}, h.h21);
    t.add(gp, {2, 1, 2}, h.h12);
  }
  validate_arrangement_table(t);
  return t;
}

// t = -1: per character, coefficient at (p,q) is the alternating sum over j.
inline HdPoly specialize_hd(const HodgeTable& t) {
  HdPoly h;
  h.d = t.d;
  for (const auto& [k, entries] : t.by_char)
    for (const auto& [key, v] : entries) {
      auto& slot = h.by_char[k][{key.p, key.q}];
      slot += key.j % 2 ? -v : v;
      if (slot == 0) {
        h.by_char[k].erase(HdKey{key.p, key.q});
        if (h.by_char[k].empty()) h.by_char.erase(k);
      }
    }
  return h;
}

// Inverts specialize_hd for any Hodge-Deligne polynomial of a plane-curve
// Milnor fiber: the (u,v)-degree of a monomial identifies the cohomological
// degree it came from, so no cancellation can have occurred. At the trivial
// character (0,0) comes from H^0, (1,1) from H^1 (with sign), and degrees 3
// and 4 from H^2 (H^2 of the complement carries no weight-2 class); at a
// nontrivial character degree 1 comes from H^1 (with sign) and degrees >= 2
// from H^2.
inline HodgeTable reconstruct_pd(const HdPoly& h) {
  if (h.d < 2) throw std::invalid_argument("reconstruct_pd: need d >= 2");
  HodgeTable t;
  t.d = h.d;
  const auto reject = [](int k, HdKey key, const std::string& why) {
    throw HypothesisError("not a curve-Milnor-fiber Hodge-Deligne polynomial: " + why +
                          " at character " + std::to_string(k) + ", monomial u^" +
                          std::to_string(key.p) + " v^" + std::to_string(key.q));
  };
  for (const auto& [k, entries] : h.by_char) {
    if (k < 0 || k >= h.d) throw std::invalid_argument("reconstruct_pd: character out of range");
    for (const auto& [key, c] : entries) {
      if (c == 0) continue;
      const auto [p, q] = key;
      if (p < 0 || q < 0 || p > 2 || q > 2) reject(k, key, "exponent outside [0, 2]");
      if (k == 0) {
        if (p == 0 && q == 0) {
          if (c < 0) reject(k, key, "negative H^0 multiplicity");
          t.add(0, {0, 0, 0}, c);
        } else if (p == 1 && q == 1) {
          if (c > 0) reject(k, key, "positive coefficient in the H^1 degree class");
          t.add(0, {1, 1, 1}, -c);
        } else if (p + q == 3 || p + q == 4) {
          if (c < 0) reject(k, key, "negative H^2 multiplicity");
          t.add(0, {p, q, 2}, c);
        } else {
          reject(k, key, "no cohomological degree yields this monomial");
        }
      } else {
        if (p + q == 1) {
          if (c > 0) reject(k, key, "positive coefficient in the H^1 degree class");
          t.add(k, {p, q, 1}, -c);
        } else if (p + q >= 2) {
          if (c < 0) reject(k, key, "negative H^2 multiplicity");
          t.add(k, {p, q, 2}, c);
        } else {
          reject(k, key, "no cohomological degree yields this monomial");
        }
      }
    }
  }
  return t;
}

// The definitional spectrum of the table: for alpha = t/d in (0, 3] with
// p = floor(3 - alpha), n_alpha is the alternating sum over j >= 1 of
// dim Gr_F^p H^j(F)_lambda = sum_{q >= j-p} h^{p,q}(H^j)_lambda.
inline SpectrumPoly spectrum_from_hodge(const HodgeTable& table) {
  if (table.d < 2) throw std::invalid_argument("spectrum_from_hodge: need d >= 2");
  SpectrumPoly sp;
  const int d = table.d;
  for (long long t = 1; t <= 3LL * d; ++t) {
    const int k = static_cast<int>(t % d);
    const int p = static_cast<int>((3LL * d - t) / d);  // floor(3 - t/d)
    long long n = 0;
    for (int j = 1; j <= 2; ++j) {
      long long gr = 0;
      for (int q = std::max(0, j - p); q <= 2; ++q) gr += table.mult(k, {p, q, j});
      n += j % 2 ? -gr : gr;
    }
    if (n != 0) sp.terms.emplace(make_fraction(t, d), n);
  }
  return sp;
}

struct BettiReport {
  long long b0 = 0, b1 = 0, b2 = 0;
  long long chi_F = 0;
};

// Betti numbers of the Milnor fiber from the table, with the consistency
// identities b0 = 1, b1 = (d-1) + 2*beta3 and chi(F) = d * chi(M) enforced.
inline BettiReport betti_and_euler(const HodgeTable& table, const ArrangementSummary& summary) {
  if (table.d != summary.d)
    throw std::invalid_argument("betti_and_euler: table and summary disagree on d");
  BettiReport r;
  for (const auto& [k, entries] : table.by_char)
    for (const auto& [key, v] : entries) {
      if (key.j == 0) r.b0 += v;
      else if (key.j == 1) r.b1 += v;
      else r.b2 += v;
    }
  r.chi_F = r.b0 - r.b1 + r.b2;
  if (r.b0 != 1) throw ConsistencyError("betti identity failed: b0 != 1");
  const long long beta3 = table.d % 3 == 0 ? table.mult(table.d / 3, {0, 1, 1}) : 0;
  if (r.b1 != table.d - 1 + 2 * beta3)
    throw ConsistencyError("betti identity failed: b1 != (d - 1) + 2*beta3");
  if (r.chi_F != summary.chi_F)
    throw ConsistencyError("Euler identity failed: b0 - b1 + b2 != d * chi(M)");
  return r;
}

}  // namespace linefiber
