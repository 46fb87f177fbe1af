#pragma once

// The runnable invariant suite. Every identity the pipeline is supposed to
// satisfy is a named check returning pass/fail instead of throwing, so a
// report can carry the complete list and the check command can print
// reproducers for the failures it finds.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <linefiber/arrangement.hpp>
#include <linefiber/builtins.hpp>
#include <linefiber/defect.hpp>
#include <linefiber/hodge.hpp>
#include <linefiber/spectrum.hpp>

namespace linefiber {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                  const std::string& detail = "") {
  out.push_back({name, pass, pass ? detail : (detail.empty() ? "failed" : detail)});
}

// Deterministic nonzero scalars for the rescaling invariance checks.
inline Cyclotomic rescale_scalar(int order, std::size_t i) {
  const int phi = euler_phi(order);
  std::vector<Rational> c(phi, Rational(0));
  c[0] = 2 + static_cast<long>(i % 3);
  if (phi > 1) c[1] = static_cast<long>(i % 2);
  return Cyclotomic(order, std::move(c));
}

}  // namespace detail

// Checks that only need (d, n3, beta3) and the objects computed from them;
// shared between the geometric and the formula-only pipelines.
inline void append_formula_checks(std::vector<CheckResult>& out, int d, long long n3,
                                  long long beta3, const ArrangementSummary& summary,
                                  const SpectrumPoly& sp, const HodgeTable& table,
                                  const HdPoly& hd) {
  using detail::check;

  {  // every exponent lies in (0,3] and has denominator dividing d
    bool ok = true;
    std::string bad;
    for (const auto& [alpha, c] : sp.terms) {
      const Rational scaled = alpha * d;
      if (!(alpha > 0 && alpha <= 3 && denominator(scaled) == 1) || c == 0) {
        ok = false;
        bad = to_string(alpha);
        break;
      }
    }
    check(out, "spectrum_support", ok, ok ? "" : "offending exponent " + bad);
  }

  {  // n_1 = C(d-1,2) - n3 = b2(M) and n_2 = -(d-1)
    const bool ok1 = sp.coeff(Rational(1)) == binom2(d - 1) - n3;
    const bool ok2 = sp.coeff(Rational(2)) == -(d - 1LL);
    check(out, "spectrum_fixed_part", ok1 && ok2,
          ok1 && ok2 ? "" : "integer-exponent coefficients disagree with b2(M), -(d-1)");
  }

  {  // n_{j/d} = n_{(d-j)/d + 2} away from the cubic characters
    bool ok = true;
    int bad = 0;
    for (int j = 1; j <= d - 1; ++j) {
      if ((3LL * j) % d == 0) continue;
      if (sp.coeff(make_fraction(j, d)) != sp.coeff(make_fraction(d - j + 2LL * d, d))) {
        ok = false;
        bad = j;
        break;
      }
    }
    check(out, "spectrum_conjugate_blocks", ok, ok ? "" : "failed at j = " + std::to_string(bad));
  }

  {  // multiplicities are dimensions
    bool ok = true;
    for (const auto& [k, entries] : table.by_char)
      for (const auto& [key, v] : entries)
        if (v < 0) ok = false;
    check(out, "table_nonnegative", ok);
  }

  {  // h^{p,q}_k = h^{q,p}_{d-k}
    bool ok = true;
    for (const auto& [k, entries] : table.by_char)
      for (const auto& [key, v] : entries)
        if (table.mult((d - k) % d, {key.q, key.p, key.j}) != v) ok = false;
    check(out, "table_conjugation_symmetry", ok);
  }

  {
    bool ok = true;
    std::string why;
    try {
      validate_arrangement_table(table);
    } catch (const ConsistencyError& e) {
      ok = false;
      why = e.what();
    }
    check(out, "table_purity_placement", ok, why);
  }

  {  // characters carrying H^1 are exactly {0} plus the cubic pair when beta3 > 0
    std::set<int> seen, expected{0};
    for (const auto& [k, entries] : table.by_char)
      for (const auto& [key, v] : entries)
        if (key.j == 1 && v != 0) seen.insert(k);
    if (beta3 > 0 && d % 3 == 0) {
      expected.insert(d / 3);
      expected.insert(2 * d / 3);
    }
    check(out, "table_eigenvalue_support", seen == expected);
  }

  {  // definitional spectrum == closed form on (0,3); difference exactly 1 at 3
    const SpectrumPoly def = spectrum_from_hodge(table);
    bool ok = true;
    std::string bad;
    std::set<Rational> exponents;
    for (const auto& [a, c] : def.terms) exponents.insert(a);
    for (const auto& [a, c] : sp.terms) exponents.insert(a);
    for (const auto& alpha : exponents) {
      const long long lhs = def.coeff(alpha);
      const long long rhs = sp.coeff(alpha);
      const bool match = alpha == 3 ? lhs - rhs == 1 : lhs == rhs;
      if (!match) {
        ok = false;
        bad = to_string(alpha);
        break;
      }
    }
    check(out, "spectrum_agreement", ok,
          ok ? "equal on (0,3); at alpha = 3 the definitional value exceeds the closed form "
               "by exactly 1"
             : "mismatch at alpha = " + bad);
  }

  {  // PD -> HD -> PD is the identity on assembled tables
    bool ok = true;
    std::string why;
    try {
      ok = reconstruct_pd(hd) == table;
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    check(out, "hd_round_trip", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    try {
      betti_and_euler(table, summary);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    check(out, "betti_euler", ok, why);
  }

  {  // beta3 moves weight within H^2 but never the definitional spectrum
    bool ok = true;
    std::string detail_msg = "no alternative beta3 assembles; vacuous";
    if (d % 3 == 0) {
      const auto weight_total = [](const HodgeTable& t, int w) {
        long long total = 0;
        for (const auto& [k, entries] : t.by_char)
          for (const auto& [key, v] : entries)
            if (key.j == 2 && key.p + key.q == w) total += v;
        return total;
      };
      for (long long alt = 0; alt <= 2; ++alt) {
        if (alt == beta3) continue;
        HodgeTable other;
        try {
          other = assemble_pd(d, n3, alt);
        } catch (const HypothesisError&) {
          continue;  // that beta3 value is not realizable with this (d, n3)
        }
        detail_msg.clear();
        if (other == table) ok = false;
        if (spectrum_from_hodge(other) != spectrum_from_hodge(table)) ok = false;
        if (weight_total(other, 2) == weight_total(table, 2)) ok = false;
        if (weight_total(other, 3) == weight_total(table, 3)) ok = false;
      }
    } else {
      detail_msg = "d not divisible by 3; vacuous";
    }
    check(out, "beta3_weight_dependence", ok, detail_msg);
  }
}

inline std::vector<CheckResult> run_formula_checks(int d, long long n3, long long beta3,
                                                   const ArrangementSummary& summary,
                                                   const SpectrumPoly& sp, const HodgeTable& table,
                                                   const HdPoly& hd) {
  std::vector<CheckResult> out;
  append_formula_checks(out, d, n3, beta3, summary, sp, table, hd);
  return out;
}

// The full suite for a geometric run: lattice and defect checks first, then
// everything the formula pipeline checks too.
inline std::vector<CheckResult> run_invariant_checks(const Arrangement& arr,
                                                     const IntersectionLattice& lattice,
                                                     const ArrangementSummary& summary,
                                                     const DefectResult& defect,
                                                     const SpectrumPoly& sp,
                                                     const HodgeTable& table, const HdPoly& hd) {
  using detail::check;
  std::vector<CheckResult> out;

  {  // sum over points of C(mult, 2) = C(d, 2)
    long long pairs = 0;
    for (const auto& lp : lattice.points) pairs += binom2(static_cast<long long>(lp.incident.size()));
    check(out, "pair_count_identity", pairs == binom2(arr.d()));
  }

  {  // incidence holds exactly for listed lines and fails for all others
    bool ok = true;
    for (const auto& lp : lattice.points) {
      std::set<int> listed(lp.incident.begin(), lp.incident.end());
      for (int i = 0; i < arr.d(); ++i)
        if (incident(arr.lines[i], lp.point) != listed.contains(i)) ok = false;
    }
    check(out, "incidence_soundness", ok);
  }

  {  // rescaling every line by a nonzero scalar reproduces the lattice
    bool ok = true;
    std::vector<ProjectiveLine> scaled;
    for (std::size_t i = 0; i < arr.lines.size(); ++i) {
      const Cyclotomic s = detail::rescale_scalar(arr.order, i);
      scaled.push_back(make_line(arr.lines[i].h[0] * s, arr.lines[i].h[1] * s,
                                 arr.lines[i].h[2] * s));
    }
    const Arrangement rescaled{arr.order, std::move(scaled)};
    if (!(rescaled == arr)) ok = false;
    const IntersectionLattice relattice = build_lattice(rescaled);
    if (relattice.points.size() != lattice.points.size()) ok = false;
    for (std::size_t i = 0; ok && i < lattice.points.size(); ++i)
      if (!(relattice.points[i].point == lattice.points[i].point) ||
          relattice.points[i].incident != lattice.points[i].incident)
        ok = false;
    check(out, "lattice_rescale_stability", ok);
  }

  check(out, "beta3_range", defect.beta3 >= 0 && defect.beta3 <= 2 && defect.diagnostic.empty(),
        defect.diagnostic);

  if (!defect.assumed && summary.d % 3 == 0) {
    const std::vector<ProjectivePoint> triples = lattice.points_of_multiplicity(3);
    const int degree = 2 * defect.m - 3;

    {  // rank is blind to the choice of point representatives
      std::vector<std::array<Cyclotomic, 3>> reps;
      for (std::size_t i = 0; i < triples.size(); ++i) {
        const Cyclotomic s = detail::rescale_scalar(arr.order, i);
        reps.push_back({triples[i].h[0] * s, triples[i].h[1] * s, triples[i].h[2] * s});
      }
      check(out, "defect_rank_rescale_invariance",
            matrix_rank(build_evaluation_matrix(reps, degree)) == defect.rank);
    }

    {  // rank is blind to row order
      std::vector<ProjectivePoint> reversed(triples.rbegin(), triples.rend());
      check(out, "defect_rank_permutation_invariance",
            matrix_rank(build_evaluation_matrix(reversed, degree)) == defect.rank);
    }

    if (!triples.empty()) {  // dropping one point lowers the rank by at most 1
      std::vector<ProjectivePoint> fewer(triples.begin(), triples.end() - 1);
      const long long r = matrix_rank(build_evaluation_matrix(fewer, degree));
      check(out, "defect_rank_monotonicity", r <= defect.rank && r >= defect.rank - 1);
    }
  }

  append_formula_checks(out, summary.d, summary.n3(), defect.beta3, summary, sp, table, hd);
  return out;
}

// ---------------------------------------------------------------------------
// Golden data for the shipped builtins, frozen as exact values.

inline SpectrumPoly ceva3_expected_spectrum() {
  SpectrumPoly sp;
  const std::pair<std::pair<long long, long long>, long long> terms[] = {
      {{1, 3}, 1},   {{4, 9}, 3},  {{5, 9}, 6},  {{2, 3}, 10}, {{7, 9}, 3},
      {{8, 9}, 9},   {{1, 1}, 16}, {{11, 9}, 6}, {{4, 3}, 10}, {{5, 3}, -2},
      {{16, 9}, 6},  {{2, 1}, -8}, {{19, 9}, 9}, {{20, 9}, 3}, {{7, 3}, -2},
      {{22, 9}, 6},  {{23, 9}, 3}, {{8, 3}, 1},  {{3, 1}, -1},
  };
  for (const auto& [frac, c] : terms) sp.terms.emplace(make_fraction(frac.first, frac.second), c);
  return sp;
}

inline SpectrumPoly triangle_expected_spectrum() {
  SpectrumPoly sp;
  sp.terms.emplace(Rational(1), 1);
  sp.terms.emplace(Rational(2), -2);
  sp.terms.emplace(Rational(3), -1);
  return sp;
}

// Fixed expected values for the three builtins; a deliberately independent
// re-statement of what the pipeline must produce on them.
inline std::vector<CheckResult> run_builtin_goldens() {
  using detail::check;
  std::vector<CheckResult> out;

  {
    const Arrangement arr = make_builtin("ceva3");
    const IntersectionLattice lattice = build_lattice(arr);
    const ArrangementSummary summary = summarize(arr, lattice);
    const DefectResult defect = triple_point_defect(summary, lattice.points_of_multiplicity(3));
    const SpectrumPoly sp = spectrum(summary.d, summary.n3());
    const HodgeTable table = assemble_pd(summary.d, summary.n3(), defect.beta3);
    check(out, "golden_ceva3_lattice",
          summary.d == 9 && summary.n3() == 12 && summary.n2() == 0 && summary.triple_only &&
              summary.essential && summary.chi_M == 9 && summary.chi_F == 81 &&
              summary.b2_M == 16);
    check(out, "golden_ceva3_defect",
          defect.m == 3 && defect.monomial_count == 10 && defect.rank == 10 && defect.beta3 == 2);
    check(out, "golden_ceva3_spectrum", sp == ceva3_expected_spectrum());
    check(out, "golden_ceva3_cubic_hodge",
          table.mult(3, {2, 1, 2}) == 0 && table.mult(3, {1, 2, 2}) == 10 &&
              table.mult(3, {2, 0, 2}) == 1 && table.mult(3, {1, 1, 2}) == 0 &&
              table.mult(3, {0, 2, 2}) == 0);
    const BettiReport betti = betti_and_euler(table, summary);
    check(out, "golden_ceva3_betti", betti.b0 == 1 && betti.b1 == 12 && betti.b2 == 92);
  }

  {
    const Arrangement arr = make_builtin("ceva2");
    const IntersectionLattice lattice = build_lattice(arr);
    const ArrangementSummary summary = summarize(arr, lattice);
    const DefectResult defect = triple_point_defect(summary, lattice.points_of_multiplicity(3));
    check(out, "golden_ceva2_lattice", summary.d == 6 && summary.n3() == 4 && summary.n2() == 3);
    check(out, "golden_ceva2_defect",
          defect.m == 2 && defect.monomial_count == 3 && defect.rank == 3 && defect.beta3 == 1);
    const HodgeTable table = assemble_pd(summary.d, summary.n3(), defect.beta3);
    check(out, "golden_ceva2_betti", betti_and_euler(table, summary).b1 == 7);
  }

  {
    const Arrangement arr = make_builtin("triangle");
    const IntersectionLattice lattice = build_lattice(arr);
    const ArrangementSummary summary = summarize(arr, lattice);
    const SpectrumPoly sp = spectrum(summary.d, summary.n3());
    check(out, "golden_triangle_lattice", summary.d == 3 && summary.n2() == 3 && summary.n3() == 0);
    check(out, "golden_triangle_spectrum", sp == triangle_expected_spectrum());
    HodgeTable expected;
    expected.d = 3;
    expected.add(0, {0, 0, 0}, 1);
    expected.add(0, {1, 1, 1}, 2);
    expected.add(0, {2, 2, 2}, 1);
    check(out, "golden_triangle_table", assemble_pd(3, 0, 0) == expected);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Random corpus runner shared by the check command and the test suite.

struct CorpusOptions {
  int count = 50;
  int max_d = 9;   // d is drawn from [3, max_d]
  std::uint64_t seed = 1;
};

struct CorpusResult {
  int checked = 0;
  std::vector<std::string> failures;  // one formatted reproducer per failed check
};

inline CorpusResult run_corpus(const CorpusOptions& options) {
  if (options.count > 0 && options.max_d < 3)
    throw std::invalid_argument("run_corpus: max_d must be at least 3");
  CorpusResult result;
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t item_seed = options.seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    const int order = i % 2 == 0 ? 1 : 3;
    std::mt19937_64 rng(item_seed);
    const int d = 3 + static_cast<int>(rng() % (options.max_d - 2));
    const Arrangement arr = generate_random_arrangement(d, order, item_seed);
    const IntersectionLattice lattice = build_lattice(arr);
    const ArrangementSummary summary = summarize(arr, lattice);
    const DefectResult defect = triple_point_defect(summary, lattice.points_of_multiplicity(3));
    const SpectrumPoly sp = spectrum(summary.d, summary.n3());
    const HodgeTable table = assemble_pd(summary.d, summary.n3(), defect.beta3);
    const HdPoly hd = specialize_hd(table);
    const auto checks = run_invariant_checks(arr, lattice, summary, defect, sp, table, hd);
    ++result.checked;
    for (const auto& c : checks) {
      if (c.pass) continue;
      result.failures.push_back("check '" + c.name + "' failed (" + c.detail +
                                "); reproducer: seed=" + std::to_string(item_seed) +
                                " d=" + std::to_string(d) + " order=" + std::to_string(order) +
                                " arrangement=" + arrangement_to_json(arr).dump());
    }
  }
  return result;
}

}  // namespace linefiber
