#pragma once

// The defect (superabundance) of the triple points: beta3 is the corank of
// the evaluation map sending a homogeneous polynomial of degree 2m - 3
// (where d = 3m) to its values at representatives of the triple points,
// computed as an exact rank over the coefficient field.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <linefiber/arrangement.hpp>
#include <linefiber/cyclotomic.hpp>
#include <linefiber/errors.hpp>
#include <linefiber/projective.hpp>

namespace linefiber {

// All exponent triples (i, j, k) with i + j + k = degree, lexicographically
// decreasing; empty for negative degree.
inline std::vector<std::array<int, 3>> monomial_basis(int degree) {
  std::vector<std::array<int, 3>> out;
  if (degree < 0) return out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

struct EvaluationMatrix {
  int order = 1;
  std::size_t n_rows = 0;  // one per point
  std::size_t n_cols = 0;  // one per monomial
  std::vector<Cyclotomic> entries;  // row-major

  const Cyclotomic& at(std::size_t r, std::size_t c) const { return entries[r * n_cols + c]; }
};

// entry(t, (i,j,k)) = x_t^i * y_t^j * z_t^k at the given representatives.
inline EvaluationMatrix build_evaluation_matrix(const std::vector<std::array<Cyclotomic, 3>>& reps,
                                                int degree) {
  EvaluationMatrix m;
  const auto basis = monomial_basis(degree);
  m.n_rows = reps.size();
  m.n_cols = basis.size();
  m.order = reps.empty() ? 1 : reps[0][0].order();
  m.entries.reserve(m.n_rows * m.n_cols);
  for (const auto& rep : reps) {
    std::array<std::vector<Cyclotomic>, 3> powers;
    for (int c = 0; c < 3; ++c) {
      powers[c].reserve(degree + 1);
      powers[c].push_back(Cyclotomic::one(rep[c].order()));
      for (int e = 1; e <= degree; ++e) powers[c].push_back(powers[c].back() * rep[c]);
    }
    for (const auto& mono : basis)
      m.entries.push_back(powers[0][mono[0]] * powers[1][mono[1]] * powers[2][mono[2]]);
  }
  return m;
}

inline EvaluationMatrix build_evaluation_matrix(const std::vector<ProjectivePoint>& points,
                                                int degree) {
  std::vector<std::array<Cyclotomic, 3>> reps;
  reps.reserve(points.size());
  for (const auto& p : points) reps.push_back(p.h);
  return build_evaluation_matrix(reps, degree);
}

// Exact rank by Gaussian elimination. Pivot choice: the first row with a
// nonzero entry in the leftmost unfinished column, so the result is
// deterministic; exact arithmetic needs no numerical pivoting.
inline long long matrix_rank(const EvaluationMatrix& m) {
  std::vector<std::vector<Cyclotomic>> rows(m.n_rows);
  for (std::size_t r = 0; r < m.n_rows; ++r) {
    rows[r].reserve(m.n_cols);
    for (std::size_t c = 0; c < m.n_cols; ++c) rows[r].push_back(m.at(r, c));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.n_cols && rank < m.n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.n_rows && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == m.n_rows) continue;
    std::swap(rows[rank], rows[pivot]);
    const Cyclotomic inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < m.n_rows; ++r) {
      if (rows[r][col].is_zero()) continue;
      const Cyclotomic factor = rows[r][col] * inv;
      for (std::size_t c = col; c < m.n_cols; ++c)
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

struct DefectResult {
  int m = 0;  // d/3 when 3 | d; 0 otherwise, in which case beta3 is identically 0
  long long n_triple = 0;
  long long monomial_count = 0;
  long long rank = 0;
  long long beta3 = 0;
  bool assumed = false;     // beta3 supplied by the caller instead of computed
  std::string diagnostic;   // nonempty when beta3 leaves the expected range {0, 1, 2}
};

inline DefectResult triple_point_defect(const ArrangementSummary& summary,
                                        const std::vector<ProjectivePoint>& triple_points) {
  if (!summary.triple_only)
    throw HypothesisError(
        "defect computation requires an arrangement with only double and triple points");
  DefectResult r;
  r.n_triple = static_cast<long long>(triple_points.size());
  if (r.n_triple != summary.n3())
    throw ConsistencyError("triple point list disagrees with the multiplicity histogram");
  if (summary.d % 3 != 0) return r;  // cubic-root eigenvalues need 3 | d
  r.m = summary.d / 3;
  const EvaluationMatrix m = build_evaluation_matrix(triple_points, 2 * r.m - 3);
  r.monomial_count = static_cast<long long>(m.n_cols);
  r.rank = matrix_rank(m);
  r.beta3 = r.n_triple - r.rank;
  if (r.beta3 > 2)
    r.diagnostic = "beta3 = " + std::to_string(r.beta3) +
                   " lies outside the expected range {0, 1, 2}; this signals a degenerate "
                   "input or an implementation bug";
  return r;
}

}  // namespace linefiber
