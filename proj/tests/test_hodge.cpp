#include <catch2/catch_amalgamated.hpp>

#include <linefiber/builtins.hpp>
#include <linefiber/checks.hpp>
#include <linefiber/hodge.hpp>

using namespace linefiber;

namespace {

long long layer_sum(const HodgeTable& t, int j) {
  long long total = 0;
  for (const auto& [k, entries] : t.by_char)
    for (const auto& [key, v] : entries)
      if (key.j == j) total += v;
  return total;
}

ArrangementSummary summary_of(const Arrangement& arr) {
  return summarize(arr, build_lattice(arr));
}

}  // namespace

TEST_CASE("H^0 and H^1 layers") {
  SECTION("d = 9, beta3 = 2: b1 = 8 + 2*2 = 12") {
    const HodgeTable t = h1_table(9, 2);
    CHECK(t.mult(0, {0, 0, 0}) == 1);
    CHECK(t.mult(0, {1, 1, 1}) == 8);
    CHECK(t.mult(3, {0, 1, 1}) == 2);
    CHECK(t.mult(6, {1, 0, 1}) == 2);
    CHECK(layer_sum(t, 1) == 12);
  }
  SECTION("d = 3, beta3 = 0: only the fixed part") {
    const HodgeTable t = h1_table(3, 0);
    CHECK(t.by_char.size() == 1);
    CHECK(t.mult(0, {0, 0, 0}) == 1);
    CHECK(t.mult(0, {1, 1, 1}) == 2);
  }
  SECTION("d = 6, beta3 = 1: weight-1 classes at k = 2 and k = 4") {
    const HodgeTable t = h1_table(6, 1);
    CHECK(t.mult(2, {0, 1, 1}) == 1);
    CHECK(t.mult(4, {1, 0, 1}) == 1);
    CHECK(t.mult(2, {1, 0, 1}) == 0);
    CHECK(t.mult(4, {0, 1, 1}) == 0);
  }
  SECTION("beta3 > 0 needs 3 | d") { CHECK_THROWS_AS(h1_table(5, 1), HypothesisError); }
}

TEST_CASE("H^2 at non-cubic characters") {
  CHECK(h2_noncubic(1, 9, 12) == std::array<long long, 3>{0, 0, 9});
  CHECK(h2_noncubic(4, 9, 12) == std::array<long long, 3>{3, 0, 6});
  CHECK(h2_noncubic(1, 2, 0) == std::array<long long, 3>{0, 0, 0});
  CHECK_THROWS_AS(h2_noncubic(3, 9, 12), std::invalid_argument);  // gamma routed wrongly
  CHECK_THROWS_AS(h2_noncubic(9, 9, 12), std::invalid_argument);  // k = d is no character
}

TEST_CASE("H^2 at the cubic characters") {
  SECTION("ceva3 values") {
    // n_{1/3} = 1, n_{4/3} = 10, n_{2/3} = 10, n_{5/3} = -2, n_{8/3} = 1, beta3 = 2
    const CubicHodgeNumbers h = h2_cubic(9, 12, 2);
    CHECK(h.h20 == 1);
    CHECK(h.h11 == 0);
    CHECK(h.h02 == 0);
    CHECK(h.h21 == 0);   // 1 - 1
    CHECK(h.h12 == 10);  // 10 + 1 + 2 - 1 - 2
  }
  SECTION("triangle: everything vanishes") {
    const CubicHodgeNumbers h = h2_cubic(3, 0, 0);
    CHECK(h.h20 == 0);
    CHECK(h.h11 == 0);
    CHECK(h.h02 == 0);
    CHECK(h.h21 == 0);
    CHECK(h.h12 == 0);
  }
  SECTION("ceva2 values") {
    const CubicHodgeNumbers h = h2_cubic(6, 4, 1);
    CHECK(h.h20 == 0);
    CHECK(h.h11 == 0);
    CHECK(h.h02 == 0);
    CHECK(h.h21 == 0);
    CHECK(h.h12 == 3);
  }
  SECTION("a wrong beta3 forces a negative multiplicity") {
    CHECK_THROWS_AS(h2_cubic(9, 12, 0), HypothesisError);
  }
  SECTION("3 must divide d") { CHECK_THROWS_AS(h2_cubic(7, 0, 0), HypothesisError); }
}

TEST_CASE("assembled tables") {
  SECTION("ceva3") {
    const HodgeTable t = assemble_pd(9, 12, 2);
    CHECK(t.mult(0, {0, 0, 0}) == 1);
    CHECK(t.mult(0, {1, 1, 1}) == 8);
    CHECK(t.mult(0, {2, 2, 2}) == 16);
    CHECK(t.by_char.at(0).size() == 3);
    CHECK(layer_sum(t, 2) == 92);  // 16 + 6*9 + 2*11
    CHECK(layer_sum(t, 1) == 12);
  }
  SECTION("triangle") {
    HodgeTable expected;
    expected.d = 3;
    expected.add(0, {0, 0, 0}, 1);
    expected.add(0, {1, 1, 1}, 2);
    expected.add(0, {2, 2, 2}, 1);
    CHECK(assemble_pd(3, 0, 0) == expected);
  }
  SECTION("d = 2: the (2,2) multiplicity C(1,2) = 0 is dropped, k = 1 empty") {
    const HodgeTable t = assemble_pd(2, 0, 0);
    CHECK(t.mult(0, {0, 0, 0}) == 1);
    CHECK(t.mult(0, {1, 1, 1}) == 1);
    CHECK(t.mult(0, {2, 2, 2}) == 0);
    CHECK(t.by_char.size() == 1);
    CHECK_FALSE(t.by_char.contains(1));
  }
  SECTION("argument validation") {
    CHECK_THROWS_AS(assemble_pd(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_pd(9, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_pd(9, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(assemble_pd(9, 0, -1), std::invalid_argument);
    // beta3 > 0 without 3 | d
    CHECK_THROWS_AS(assemble_pd(7, 0, 1), HypothesisError);
    // n3 too large to be realizable
    CHECK_THROWS_AS(assemble_pd(4, 100, 0), HypothesisError);
  }
}

TEST_CASE("specialization at t = -1") {
  SECTION("triangle trivial character") {
    const HdPoly h = specialize_hd(assemble_pd(3, 0, 0));
    CHECK(h.coeff(0, {0, 0}) == 1);
    CHECK(h.coeff(0, {1, 1}) == -2);
    CHECK(h.coeff(0, {2, 2}) == 1);
    CHECK(h.by_char.size() == 1);
  }
  SECTION("ceva3 at gamma") {
    const HdPoly h = specialize_hd(assemble_pd(9, 12, 2));
    CHECK(h.coeff(3, {0, 1}) == -2);
    CHECK(h.coeff(3, {2, 0}) == 1);
    CHECK(h.coeff(3, {1, 2}) == 10);
    CHECK(h.by_char.at(3).size() == 3);
  }
  SECTION("characters without classes stay absent") {
    const HdPoly h = specialize_hd(assemble_pd(2, 0, 0));
    CHECK_FALSE(h.by_char.contains(1));
  }
}

TEST_CASE("reconstruction from the Hodge-Deligne specialization") {
  SECTION("round trip on assembled tables") {
    for (const auto& [d, n3, beta3] :
         {std::array<long long, 3>{3, 0, 0}, {2, 0, 0}, {9, 12, 2}, {6, 4, 1}, {12, 10, 0}}) {
      const HodgeTable t = assemble_pd(static_cast<int>(d), n3, beta3);
      CHECK(reconstruct_pd(specialize_hd(t)) == t);
    }
  }
  SECTION("round trip on a general curve-shaped table") {
    // weight-3 classes at the trivial character and H^1 at characters that a
    // triple-point arrangement never uses
    HodgeTable t;
    t.d = 4;
    t.add(0, {0, 0, 0}, 1);
    t.add(0, {1, 1, 1}, 3);
    t.add(0, {2, 1, 2}, 2);
    t.add(0, {1, 2, 2}, 2);
    t.add(0, {2, 2, 2}, 5);
    t.add(1, {1, 0, 1}, 1);
    t.add(1, {1, 1, 2}, 4);
    t.add(3, {0, 1, 1}, 1);
    t.add(3, {1, 1, 2}, 4);
    t.add(2, {2, 0, 2}, 1);
    t.add(2, {0, 2, 2}, 1);
    t.add(2, {2, 2, 2}, 2);
    CHECK(reconstruct_pd(specialize_hd(t)) == t);
  }
  SECTION("illegal monomials are rejected") {
    HdPoly h;
    h.d = 4;
    h.by_char[0][{2, 0}] = 1;  // weight 2 at the trivial character has no source
    CHECK_THROWS_AS(reconstruct_pd(h), HypothesisError);
  }
  SECTION("sign violations are rejected") {
    {
      HdPoly h;
      h.d = 4;
      h.by_char[0][{1, 1}] = 2;  // H^1 contributes negatively
      CHECK_THROWS_AS(reconstruct_pd(h), HypothesisError);
    }
    {
      HdPoly h;
      h.d = 4;
      h.by_char[1][{1, 0}] = 1;
      CHECK_THROWS_AS(reconstruct_pd(h), HypothesisError);
    }
    {
      HdPoly h;
      h.d = 4;
      h.by_char[1][{0, 0}] = 1;  // H^0 never appears at a nontrivial character
      CHECK_THROWS_AS(reconstruct_pd(h), HypothesisError);
    }
  }
}

TEST_CASE("definitional spectrum from the table") {
  SECTION("ceva3 at alpha = 5/3") {
    const HodgeTable t = assemble_pd(9, 12, 2);
    const SpectrumPoly def = spectrum_from_hodge(t);
    CHECK(def.coeff(make_fraction(5, 3)) == -2);  // -beta3 + (h11 + h12) at gamma'
  }
  SECTION("triangle at alpha = 2") {
    CHECK(spectrum_from_hodge(assemble_pd(3, 0, 0)).coeff(Rational(2)) == -2);
  }
  SECTION("exponents with alpha*d not integral never appear") {
    const SpectrumPoly def = spectrum_from_hodge(assemble_pd(9, 12, 2));
    CHECK(def.coeff(make_fraction(1, 2)) == 0);
    for (const auto& [alpha, c] : def.terms) CHECK(denominator(Rational(alpha * 9)) == 1);
  }
}

TEST_CASE("betti numbers and the Euler identity") {
  SECTION("ceva3: (1, 12, 92), chi = 81") {
    const Arrangement arr = make_builtin("ceva3");
    const BettiReport b = betti_and_euler(assemble_pd(9, 12, 2), summary_of(arr));
    CHECK(b.b0 == 1);
    CHECK(b.b1 == 12);
    CHECK(b.b2 == 92);
    CHECK(b.chi_F == 81);
  }
  SECTION("triangle: (1, 2, 1), chi = 0") {
    const Arrangement arr = make_builtin("triangle");
    const BettiReport b = betti_and_euler(assemble_pd(3, 0, 0), summary_of(arr));
    CHECK(b.b0 == 1);
    CHECK(b.b1 == 2);
    CHECK(b.b2 == 1);
    CHECK(b.chi_F == 0);
  }
  SECTION("d = 2: (1, 1, 0), chi = 0") {
    ArrangementSummary s;
    s.d = 2;
    s.mult_histogram[2] = 1;
    s.triple_only = true;
    s.chi_M = 0;
    s.chi_F = 0;
    s.b2_M = 0;
    const BettiReport b = betti_and_euler(assemble_pd(2, 0, 0), s);
    CHECK(b.b0 == 1);
    CHECK(b.b1 == 1);
    CHECK(b.b2 == 0);
    CHECK(b.chi_F == 0);
  }
  SECTION("a wrong summary is caught") {
    ArrangementSummary s;
    s.d = 3;
    s.chi_F = 7;
    CHECK_THROWS_AS(betti_and_euler(assemble_pd(3, 0, 0), s), ConsistencyError);
  }
}

TEST_CASE("table invariants across the formula grid") {
  for (int d = 2; d <= 12; ++d) {
    const long long n3_max = binom2(d) / 3;
    for (long long n3 = 0; n3 <= n3_max; ++n3) {
      for (long long beta3 = 0; beta3 <= (d % 3 == 0 ? 2 : 0); ++beta3) {
        HodgeTable t;
        try {
          t = assemble_pd(d, n3, beta3);
        } catch (const HypothesisError&) {
          continue;  // combination not realizable; nothing to check
        }
        // non-negativity and placement
        CHECK_NOTHROW(validate_arrangement_table(t));
        // conjugation symmetry
        for (const auto& [k, entries] : t.by_char)
          for (const auto& [key, v] : entries)
            CHECK(t.mult((d - k) % d, {key.q, key.p, key.j}) == v);
        // closed form vs definition: equal on (0,3), off by exactly 1 at 3
        const SpectrumPoly closed = spectrum(d, n3);
        const SpectrumPoly def = spectrum_from_hodge(t);
        std::set<Rational> exponents;
        for (const auto& [a, c] : closed.terms) exponents.insert(a);
        for (const auto& [a, c] : def.terms) exponents.insert(a);
        exponents.insert(Rational(3));
        for (const auto& alpha : exponents) {
          if (alpha == 3) CHECK(def.coeff(alpha) - closed.coeff(alpha) == 1);
          else CHECK(def.coeff(alpha) == closed.coeff(alpha));
        }
        // round trip
        CHECK(reconstruct_pd(specialize_hd(t)) == t);
        // Euler identity against the derived combinatorics
        ArrangementSummary s;
        s.d = d;
        const long long n2 = binom2(d) - 3 * n3;
        if (n2 > 0) s.mult_histogram[2] = n2;
        if (n3 > 0) s.mult_histogram[3] = n3;
        s.triple_only = true;
        s.chi_M = 3 - 2LL * d + n2 + 2 * n3;
        s.chi_F = static_cast<long long>(d) * s.chi_M;
        s.b2_M = binom2(d - 1) - n3;
        CHECK_NOTHROW(betti_and_euler(t, s));
      }
    }
  }
}

TEST_CASE("beta3 moves weights but not the definitional spectrum") {
  // (d, n3) pairs admitting every beta3 in {0, 1, 2}
  for (const auto& [d, n3] : {std::pair<int, long long>{9, 9}, {12, 12}, {9, 5}}) {
    HodgeTable tables[3];
    bool all_ok = true;
    for (long long b = 0; b <= 2; ++b) {
      try {
        tables[b] = assemble_pd(d, n3, b);
      } catch (const HypothesisError&) {
        all_ok = false;
      }
    }
    if (!all_ok) continue;
    const auto weight_total = [](const HodgeTable& t, int w) {
      long long total = 0;
      for (const auto& [k, entries] : t.by_char)
        for (const auto& [key, v] : entries)
          if (key.j == 2 && key.p + key.q == w) total += v;
      return total;
    };
    const SpectrumPoly def0 = spectrum_from_hodge(tables[0]);
    for (int b = 1; b <= 2; ++b) {
      CHECK(spectrum_from_hodge(tables[b]) == def0);
      CHECK_FALSE(tables[b] == tables[0]);
      CHECK(weight_total(tables[b], 2) != weight_total(tables[0], 2));
      CHECK(weight_total(tables[b], 3) != weight_total(tables[0], 3));
    }
  }
}
