#pragma once

// Line arrangements in P^2 and their intersection lattices: the grouped
// pairwise intersection points with incidence lists, the multiplicity
// histogram, Euler characteristics and the hypothesis flags the rest of the
// pipeline keys on.

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <linefiber/cyclotomic.hpp>
#include <linefiber/errors.hpp>
#include <linefiber/numeric.hpp>
#include <linefiber/projective.hpp>

namespace linefiber {

struct Arrangement {
  int order = 1;                      // cyclotomic order of the coefficient field
  std::vector<ProjectiveLine> lines;  // normalized, pairwise distinct

  int d() const { return static_cast<int>(lines.size()); }
  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

inline Arrangement make_arrangement(int order, std::vector<ProjectiveLine> lines) {
  if (order < 1) throw ParseError("cyclotomic order must be a positive integer");
  if (lines.size() < 2) throw ParseError("an arrangement needs at least 2 lines");
  for (const auto& l : lines)
    if (l.order() != order) throw FieldError("line coefficients disagree with the arrangement order");
  std::set<ProjectiveLine> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!seen.insert(lines[i]).second)
      throw ParseError("duplicate line at index " + std::to_string(i) + ": " +
                       to_string(lines[i]) + " is proportional to an earlier line");
  }
  return Arrangement{order, std::move(lines)};
}

// Input document: { "cyclotomic_order": m, "lines": [[s, s, s], ...] } with
// each s a coefficient string in the parse_cyclotomic grammar.
inline Arrangement load_arrangement(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("arrangement document must be a JSON object");
  if (!doc.contains("cyclotomic_order") || !doc["cyclotomic_order"].is_number_integer())
    throw ParseError("missing integer field 'cyclotomic_order'");
  const long long order_ll = doc["cyclotomic_order"].get<long long>();
  if (order_ll < 1 || order_ll > 100000)
    throw ParseError("'cyclotomic_order' must lie in [1, 100000]");
  const int order = static_cast<int>(order_ll);
  if (!doc.contains("lines") || !doc["lines"].is_array())
    throw ParseError("missing array field 'lines'");
  std::vector<ProjectiveLine> lines;
  for (std::size_t i = 0; i < doc["lines"].size(); ++i) {
    const auto& row = doc["lines"][i];
    if (!row.is_array() || row.size() != 3)
      throw ParseError("line " + std::to_string(i) + " must be an array of 3 coefficient strings");
    std::array<Cyclotomic, 3> coeffs;
    for (int c = 0; c < 3; ++c) {
      if (!row[c].is_string())
        throw ParseError("line " + std::to_string(i) + " coefficient " + std::to_string(c) +
                         " must be a string");
      coeffs[c] = parse_cyclotomic(row[c].get<std::string>(), order);
    }
    try {
      lines.push_back(make_normalized<LineTag>(std::move(coeffs)));
    } catch (const std::invalid_argument&) {
      throw ParseError("line " + std::to_string(i) + " has all three coefficients zero");
    }
  }
  return make_arrangement(order, std::move(lines));
}

inline nlohmann::json arrangement_to_json(const Arrangement& arr) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : arr.lines)
    lines.push_back({to_string(l.h[0]), to_string(l.h[1]), to_string(l.h[2])});
  return {{"cyclotomic_order", arr.order}, {"lines", lines}};
}

struct LatticePoint {
  ProjectivePoint point;
  std::vector<int> incident;  // sorted line indices, size >= 2
};

struct IntersectionLattice {
  std::vector<LatticePoint> points;  // sorted by canonical point coordinates

  std::vector<ProjectivePoint> points_of_multiplicity(int k) const {
    std::vector<ProjectivePoint> out;
    for (const auto& lp : points)
      if (static_cast<int>(lp.incident.size()) == k) out.push_back(lp.point);
    return out;
  }
};

// Groups all C(d,2) pairwise intersections by canonical point equality.
inline IntersectionLattice build_lattice(const Arrangement& arr) {
  std::map<ProjectivePoint, std::set<int>> groups;
  const int d = arr.d();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const ProjectivePoint pt = intersect_lines(arr.lines[i], arr.lines[j]);
      auto& g = groups[pt];
      g.insert(i);
      g.insert(j);
    }
  IntersectionLattice lattice;
  long long pair_count = 0;
  for (auto& [pt, inc] : groups) {
    lattice.points.push_back(LatticePoint{pt, std::vector<int>(inc.begin(), inc.end())});
    pair_count += binom2(static_cast<long long>(inc.size()));
  }
  if (pair_count != binom2(d))
    throw ConsistencyError("lattice pair count mismatch: expected C(d,2)");
  return lattice;
}

struct ArrangementSummary {
  int d = 0;
  std::map<int, long long> mult_histogram;  // multiplicity -> count, zeros omitted
  bool triple_only = false;
  bool essential = false;  // false exactly when all lines share a common point
  long long chi_M = 0;     // Euler characteristic of the projective complement
  long long chi_F = 0;     // = d * chi_M
  long long b2_M = 0;      // C(d-1,2) - n3, meaningful when triple_only

  long long count(int multiplicity) const {
    const auto it = mult_histogram.find(multiplicity);
    return it == mult_histogram.end() ? 0 : it->second;
  }
  long long n2() const { return count(2); }
  long long n3() const { return count(3); }
};

inline ArrangementSummary summarize(const Arrangement& arr, const IntersectionLattice& lattice) {
  ArrangementSummary s;
  s.d = arr.d();
  long long excess = 0;  // sum over points of (multiplicity - 1)
  int max_mult = 0;
  bool pencil = false;
  for (const auto& lp : lattice.points) {
    const int k = static_cast<int>(lp.incident.size());
    ++s.mult_histogram[k];
    excess += k - 1;
    max_mult = std::max(max_mult, k);
    if (k == s.d) pencil = true;
  }
  s.triple_only = max_mult <= 3;
  s.essential = !pencil;
  s.chi_M = 3 - 2LL * s.d + excess;
  s.chi_F = static_cast<long long>(s.d) * s.chi_M;
  s.b2_M = s.triple_only ? binom2(s.d - 1) - s.n3() : 0;
  return s;
}

// Deterministic rejection sampler: draws lines with small coefficients until
// the lattice has only double and triple points and, for d >= 3, is not a
// pencil (d = 2 is always a pencil and is accepted as-is). Throws
// GenerationError once max_attempts candidate arrangements were rejected.
inline Arrangement generate_random_arrangement(int d, int order, std::uint64_t seed,
                                               int max_attempts = 5000) {
  if (d < 2) throw std::invalid_argument("generate_random_arrangement: need d >= 2");
  if (order < 1) throw std::invalid_argument("generate_random_arrangement: order must be positive");
  std::mt19937_64 rng(seed);
  const int phi = euler_phi(order);
  // Integer combinations a + b*zeta with a, b in [-2, 2]; raw rng() modulo a
  // small constant keeps the stream identical across standard libraries.
  const auto small_coeff = [&rng, order, phi]() {
    std::vector<Rational> c(phi, Rational(0));
    c[0] = static_cast<long>(rng() % 5) - 2;
    if (phi > 1) c[1] = static_cast<long>(rng() % 5) - 2;
    return Cyclotomic(order, std::move(c));
  };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::set<ProjectiveLine> lines;
    for (int tries = 0; static_cast<int>(lines.size()) < d && tries < 200 * d; ++tries) {
      std::array<Cyclotomic, 3> raw{small_coeff(), small_coeff(), small_coeff()};
      if (raw[0].is_zero() && raw[1].is_zero() && raw[2].is_zero()) continue;
      lines.insert(make_normalized<LineTag>(std::move(raw)));
    }
    if (static_cast<int>(lines.size()) < d) continue;
    Arrangement arr{order, std::vector<ProjectiveLine>(lines.begin(), lines.end())};
    const ArrangementSummary s = summarize(arr, build_lattice(arr));
    if (s.triple_only && (s.essential || d == 2)) return arr;
  }
  throw GenerationError("generate_random_arrangement: no valid arrangement within " +
                        std::to_string(max_attempts) + " attempts (d = " + std::to_string(d) +
                        ", order = " + std::to_string(order) + ")");
}

}  // namespace linefiber
