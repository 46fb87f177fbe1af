#pragma once

// Pipeline composition and report serialization. Both entry points fill the
// same RunReport shape: the geometric one computes everything from a line
// list, the formula one from the three determining integers (d, n3, beta3).
// JSON output is canonical: arrays sorted, rationals rendered as strings,
// identical inputs give byte-identical text.

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <linefiber/arrangement.hpp>
#include <linefiber/builtins.hpp>
#include <linefiber/checks.hpp>
#include <linefiber/defect.hpp>
#include <linefiber/hodge.hpp>
#include <linefiber/spectrum.hpp>

namespace linefiber {

struct RunReport {
  bool geometric = true;
  ArrangementSummary summary;
  DefectResult defect;
  SpectrumPoly spectrum;
  HodgeTable pd;
  HdPoly hd;
  BettiReport betti;
  std::vector<CheckResult> checks;

  bool all_checks_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct AnalyzeOptions {
  std::optional<long long> assume_beta3;  // skip the rank computation
};

inline RunReport analyze_arrangement(const Arrangement& arr, const AnalyzeOptions& options = {}) {
  const IntersectionLattice lattice = build_lattice(arr);
  RunReport report;
  report.geometric = true;
  report.summary = summarize(arr, lattice);
  if (!report.summary.triple_only) {
    for (const auto& lp : lattice.points)
      if (lp.incident.size() > 3)
        throw HypothesisError("arrangement has a point of multiplicity " +
                              std::to_string(lp.incident.size()) + " at " + to_string(lp.point) +
                              "; only double and triple points are supported");
  }
  if (!report.summary.essential) {
    for (const auto& lp : lattice.points)
      if (static_cast<int>(lp.incident.size()) == arr.d())
        throw HypothesisError("arrangement is a pencil: all lines pass through " +
                              to_string(lp.point));
  }
  const std::vector<ProjectivePoint> triples = lattice.points_of_multiplicity(3);
  if (options.assume_beta3) {
    const long long assumed = *options.assume_beta3;
    if (assumed < 0 || assumed > 2)
      throw std::invalid_argument("assume-beta3 must lie in {0, 1, 2}");
    if (assumed != 0 && report.summary.d % 3 != 0)
      throw std::invalid_argument("assume-beta3 > 0 requires d divisible by 3");
    report.defect.assumed = true;
    report.defect.beta3 = assumed;
    report.defect.n_triple = report.summary.n3();
    if (report.summary.d % 3 == 0) {
      report.defect.m = report.summary.d / 3;
      report.defect.monomial_count = binom2(2LL * report.defect.m - 1);
    }
  } else {
    report.defect = triple_point_defect(report.summary, triples);
  }
  report.spectrum = spectrum(report.summary.d, report.summary.n3());
  report.pd = assemble_pd(report.summary.d, report.summary.n3(), report.defect.beta3);
  report.hd = specialize_hd(report.pd);
  report.betti = betti_and_euler(report.pd, report.summary);
  report.checks = run_invariant_checks(arr, lattice, report.summary, report.defect,
                                       report.spectrum, report.pd, report.hd);
  return report;
}

inline RunReport formulas_report(int d, long long n3, long long beta3) {
  if (d < 2) throw std::invalid_argument("formulas: need d >= 2");
  if (n3 < 0) throw std::invalid_argument("formulas: n3 must be non-negative");
  const long long n2 = binom2(d) - 3 * n3;
  if (n2 < 0)
    throw HypothesisError("n3 = " + std::to_string(n3) + " exceeds C(d,2)/3; impossible for a " +
                          std::to_string(d) + "-line arrangement with only double and triple points");
  RunReport report;
  report.geometric = false;
  report.summary.d = d;
  if (n2 > 0) report.summary.mult_histogram[2] = n2;
  if (n3 > 0) report.summary.mult_histogram[3] = n3;
  report.summary.triple_only = true;
  // a triple-only arrangement can only be a pencil when d <= 3
  report.summary.essential = d >= 4 || (d == 3 && n3 == 0);
  report.summary.chi_M = 3 - 2LL * d + n2 + 2 * n3;
  report.summary.chi_F = static_cast<long long>(d) * report.summary.chi_M;
  report.summary.b2_M = binom2(d - 1) - n3;
  report.defect.assumed = true;
  report.defect.beta3 = beta3;
  report.defect.n_triple = n3;
  if (d % 3 == 0) {
    report.defect.m = d / 3;
    report.defect.monomial_count = binom2(2LL * report.defect.m - 1);
  }
  report.spectrum = spectrum(d, n3);
  report.pd = assemble_pd(d, n3, beta3);
  report.hd = specialize_hd(report.pd);
  report.betti = betti_and_euler(report.pd, report.summary);
  report.checks =
      run_formula_checks(d, n3, beta3, report.summary, report.spectrum, report.pd, report.hd);
  return report;
}

// --------------------------------------------------------------------------
// JSON forms. Exponents and field elements are strings; everything else is
// a small integer.

inline nlohmann::json summary_to_json(const ArrangementSummary& s) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [mult, count] : s.mult_histogram) histogram[std::to_string(mult)] = count;
  return {{"d", s.d},           {"mult_histogram", histogram}, {"triple_only", s.triple_only},
          {"essential", s.essential}, {"chi_M", s.chi_M},      {"chi_F", s.chi_F},
          {"b2_M", s.b2_M}};
}

inline nlohmann::json defect_to_json(const DefectResult& r) {
  nlohmann::json out{{"m", r.m},
                     {"n_triple", r.n_triple},
                     {"monomial_count", r.monomial_count},
                     {"rank", r.rank},
                     {"beta3", r.beta3},
                     {"assumed", r.assumed}};
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

inline nlohmann::json spectrum_to_json(const SpectrumPoly& sp) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [alpha, c] : sp.terms)
    out.push_back({{"alpha", to_string(alpha)}, {"coeff", c}});
  return out;
}

inline nlohmann::json pd_to_json(const HodgeTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, entries] : t.by_char)
    for (const auto& [key, v] : entries)
      out.push_back({{"k", k}, {"p", key.p}, {"q", key.q}, {"j", key.j}, {"mult", v}});
  return out;
}

inline nlohmann::json hd_to_json(const HdPoly& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, entries] : h.by_char)
    for (const auto& [key, v] : entries)
      out.push_back({{"k", k}, {"p", key.p}, {"q", key.q}, {"coeff", v}});
  return out;
}

inline nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

inline nlohmann::json betti_to_json(const BettiReport& b) {
  return {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}, {"chi_F", b.chi_F}};
}

inline nlohmann::json report_to_json(const RunReport& r) {
  return {{"summary", summary_to_json(r.summary)}, {"defect", defect_to_json(r.defect)},
          {"spectrum", spectrum_to_json(r.spectrum)}, {"pd", pd_to_json(r.pd)},
          {"hd", hd_to_json(r.hd)},                 {"betti", betti_to_json(r.betti)},
          {"checks", checks_to_json(r.checks)}};
}

inline std::string report_to_text(const RunReport& r) {
  std::ostringstream out;
  out << "arrangement: d = " << r.summary.d;
  out << ", points:";
  for (const auto& [mult, count] : r.summary.mult_histogram)
    out << " n" << mult << " = " << count;
  if (r.summary.mult_histogram.empty()) out << " none";
  out << "\nflags: triple_only = " << (r.summary.triple_only ? "yes" : "no")
      << ", essential = " << (r.summary.essential ? "yes" : "no") << "\n";
  out << "chi(M) = " << r.summary.chi_M << ", chi(F) = " << r.summary.chi_F
      << ", b2(M) = " << r.summary.b2_M << "\n";
  out << "defect: m = " << r.defect.m << ", triple points = " << r.defect.n_triple
      << ", monomials = " << r.defect.monomial_count << ", rank = " << r.defect.rank
      << ", beta3 = " << r.defect.beta3 << (r.defect.assumed ? " (assumed)" : "") << "\n";
  out << "betti: b0 = " << r.betti.b0 << ", b1 = " << r.betti.b1 << ", b2 = " << r.betti.b2
      << ", chi(F) = " << r.betti.chi_F << "\n";
  if (!r.defect.diagnostic.empty()) out << "defect diagnostic: " << r.defect.diagnostic << "\n";
  out << "spectrum (alpha coeff):\n";
  for (const auto& [alpha, c] : r.spectrum.terms)
    out << "  " << to_string(alpha) << "  " << c << "\n";
  out << "equivariant Hodge table (k p q j mult):\n";
  for (const auto& [k, entries] : r.pd.by_char)
    for (const auto& [key, v] : entries)
      out << "  " << k << " " << key.p << " " << key.q << " " << key.j << " " << v << "\n";
  out << "Hodge-Deligne specialization (k p q coeff):\n";
  for (const auto& [k, entries] : r.hd.by_char)
    for (const auto& [key, v] : entries)
      out << "  " << k << " " << key.p << " " << key.q << " " << v << "\n";
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace linefiber
