#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <set>

#include <linefiber/arrangement.hpp>
#include <linefiber/builtins.hpp>
#include <linefiber/numeric.hpp>

using namespace linefiber;
using nlohmann::json;

TEST_CASE("load_arrangement from a JSON document") {
  SECTION("ceva3 input document gives d = 9 over Q(zeta_3)") {
    json lines = json::array();
    for (const char* za : {"-1", "-z", "-z^2"}) {
      lines.push_back({"1", za, "0"});
      lines.push_back({"1", "0", za});
      lines.push_back({"0", "1", za});
    }
    const Arrangement arr = load_arrangement({{"cyclotomic_order", 3}, {"lines", lines}});
    CHECK(arr.d() == 9);
    CHECK(arr.order == 3);
    CHECK(arr == make_builtin("ceva3"));
  }
  SECTION("triangle") {
    const Arrangement arr = load_arrangement(
        {{"cyclotomic_order", 1},
         {"lines", json::array({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})}});
    CHECK(arr.d() == 3);
  }
  SECTION("proportional rows are duplicates") {
    const json doc = {{"cyclotomic_order", 1},
                      {"lines", json::array({{"1", "-1", "0"}, {"2", "-2", "0"}})}};
    CHECK_THROWS_AS(load_arrangement(doc), ParseError);
  }
  SECTION("all-zero coefficient triple") {
    const json doc = {{"cyclotomic_order", 1},
                      {"lines", json::array({{"1", "0", "0"}, {"0", "0", "0"}})}};
    CHECK_THROWS_AS(load_arrangement(doc), ParseError);
  }
  SECTION("coefficient parse failure") {
    const json doc = {{"cyclotomic_order", 1},
                      {"lines", json::array({{"1", "0", "0"}, {"0", "w", "0"}})}};
    CHECK_THROWS_AS(load_arrangement(doc), ParseError);
  }
  SECTION("fewer than two lines") {
    const json doc = {{"cyclotomic_order", 1}, {"lines", json::array({{"1", "0", "0"}})}};
    CHECK_THROWS_AS(load_arrangement(doc), ParseError);
  }
  SECTION("missing or bad fields") {
    CHECK_THROWS_AS(load_arrangement(json::array()), ParseError);
    CHECK_THROWS_AS(load_arrangement({{"lines", json::array()}}), ParseError);
    CHECK_THROWS_AS(load_arrangement({{"cyclotomic_order", 0}, {"lines", json::array()}}),
                    ParseError);
  }
}

TEST_CASE("arrangement round trips through its JSON form") {
  for (const char* name : {"ceva3", "ceva2", "triangle"}) {
    const Arrangement arr = make_builtin(name);
    CHECK(load_arrangement(arrangement_to_json(arr)) == arr);
  }
}

TEST_CASE("lattice of the ceva3 arrangement: 12 triple points, nothing else") {
  const IntersectionLattice lattice = build_lattice(make_builtin("ceva3"));
  CHECK(lattice.points.size() == 12);
  for (const auto& lp : lattice.points) CHECK(lp.incident.size() == 3);
  // 12 * C(3,2) accounts for all C(9,2) = 36 pairs, so no double points exist
  CHECK(12 * binom2(3) == binom2(9));
}

TEST_CASE("lattice of the triangle: 3 double points") {
  const IntersectionLattice lattice = build_lattice(make_builtin("triangle"));
  CHECK(lattice.points.size() == 3);
  for (const auto& lp : lattice.points) CHECK(lp.incident.size() == 2);
}

TEST_CASE("lattice of the six-line ceva2 arrangement: 4 triples and 3 doubles") {
  const IntersectionLattice lattice = build_lattice(make_builtin("ceva2"));
  CHECK(lattice.points.size() == 7);
  CHECK(lattice.points_of_multiplicity(3).size() == 4);
  CHECK(lattice.points_of_multiplicity(2).size() == 3);
  // the four triples are the sign points [1:+-1:+-1]
  const std::set<ProjectivePoint> triples = [&] {
    const auto v = lattice.points_of_multiplicity(3);
    return std::set<ProjectivePoint>(v.begin(), v.end());
  }();
  for (const char* y : {"1", "-1"})
    for (const char* z : {"1", "-1"}) CHECK(triples.contains(parse_point(1, "1", y, z)));
}

TEST_CASE("summaries") {
  SECTION("ceva3") {
    const Arrangement arr = make_builtin("ceva3");
    const ArrangementSummary s = summarize(arr, build_lattice(arr));
    CHECK(s.d == 9);
    CHECK(s.n2() == 0);
    CHECK(s.n3() == 12);
    CHECK(s.triple_only);
    CHECK(s.essential);
    CHECK(s.chi_M == 9);
    CHECK(s.chi_F == 81);
    CHECK(s.b2_M == 16);
  }
  SECTION("triangle") {
    const Arrangement arr = make_builtin("triangle");
    const ArrangementSummary s = summarize(arr, build_lattice(arr));
    CHECK(s.d == 3);
    CHECK(s.n2() == 3);
    CHECK(s.n3() == 0);
    CHECK(s.triple_only);
    CHECK(s.essential);
    CHECK(s.chi_M == 0);
    CHECK(s.chi_F == 0);
    CHECK(s.b2_M == 1);
  }
  SECTION("pencil of 4 lines through [0:0:1]") {
    const Arrangement arr =
        make_arrangement(1, {parse_line(1, "1", "0", "0"), parse_line(1, "0", "1", "0"),
                             parse_line(1, "1", "-1", "0"), parse_line(1, "1", "1", "0")});
    const IntersectionLattice lattice = build_lattice(arr);
    const ArrangementSummary s = summarize(arr, lattice);
    CHECK_FALSE(s.essential);
    CHECK_FALSE(s.triple_only);
    CHECK(lattice.points.size() == 1);
    CHECK(lattice.points[0].incident.size() == 4);
    CHECK(lattice.points[0].point == parse_point(1, "0", "0", "1"));
  }
}

TEST_CASE("pair-count identity and incidence soundness on random arrangements") {
  for (const int order : {1, 3}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const int d = 3 + static_cast<int>(seed);
      const Arrangement arr = generate_random_arrangement(d, order, seed);
      const IntersectionLattice lattice = build_lattice(arr);
      long long pairs = 0;
      for (const auto& lp : lattice.points) {
        pairs += binom2(static_cast<long long>(lp.incident.size()));
        const std::set<int> listed(lp.incident.begin(), lp.incident.end());
        for (int i = 0; i < d; ++i)
          CHECK(incident(arr.lines[i], lp.point) == listed.contains(i));
      }
      CHECK(pairs == binom2(d));
      const ArrangementSummary s = summarize(arr, lattice);
      CHECK(s.triple_only);
      CHECK(s.n2() == binom2(d) - 3 * s.n3());
    }
  }
}

TEST_CASE("lattice is stable under rescaling input lines") {
  const Arrangement arr = make_builtin("ceva3");
  std::vector<ProjectiveLine> scaled;
  int i = 0;
  for (const auto& l : arr.lines) {
    const Cyclotomic s = parse_cyclotomic(i++ % 2 ? "2-z" : "1/2", 3);
    scaled.push_back(make_line(l.h[0] * s, l.h[1] * s, l.h[2] * s));
  }
  const Arrangement rescaled = make_arrangement(3, std::move(scaled));
  CHECK(rescaled == arr);
  const IntersectionLattice a = build_lattice(arr);
  const IntersectionLattice b = build_lattice(rescaled);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t p = 0; p < a.points.size(); ++p) {
    CHECK(a.points[p].point == b.points[p].point);
    CHECK(a.points[p].incident == b.points[p].incident);
  }
}

TEST_CASE("random generation contract") {
  SECTION("d = 2 yields two lines and one double point") {
    const Arrangement arr = generate_random_arrangement(2, 1, 42);
    CHECK(arr.d() == 2);
    const IntersectionLattice lattice = build_lattice(arr);
    CHECK(lattice.points.size() == 1);
    CHECK(lattice.points[0].incident.size() == 2);
  }
  SECTION("deterministic in the seed") {
    const Arrangement a = generate_random_arrangement(6, 1, 1);
    const Arrangement b = generate_random_arrangement(6, 1, 1);
    CHECK(a == b);
    CHECK(arrangement_to_json(a).dump() == arrangement_to_json(b).dump());
    const ArrangementSummary s = summarize(a, build_lattice(a));
    CHECK(s.triple_only);
    CHECK(s.essential);
  }
  SECTION("pair identity at d = 4") {
    const Arrangement arr = generate_random_arrangement(4, 1, 9);
    const ArrangementSummary s = summarize(arr, build_lattice(arr));
    CHECK(s.n2() + 3 * s.n3() == 6);
  }
  SECTION("d < 2 is rejected") {
    CHECK_THROWS_AS(generate_random_arrangement(1, 1, 0), std::invalid_argument);
  }
  SECTION("an exhausted attempt budget throws") {
    CHECK_THROWS_AS(generate_random_arrangement(6, 1, 1, /*max_attempts=*/0), GenerationError);
  }
}
