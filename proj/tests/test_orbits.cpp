#include <doctest.h>

#include "affcells/orbits.hpp"

using namespace affcells;

TEST_SUITE("orbits") {
  TEST_CASE("shipped tables are consistent") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
      CAPTURE(name);
      const RootDatum d(CartanType::parse(name));
      const auto table = orbit_table(d);
      const auto problems = validate_orbit_table(d, table);
      CHECK_MESSAGE(problems.empty(), (problems.empty() ? "" : problems.front()));
      int zero = 0, regular = 0;
      for (const auto& r : table) {
        zero += r.dim_springer == d.num_positive_roots();
        regular += r.dim_springer == 0;
      }
      CHECK(zero == 1);
      CHECK(regular == 1);
    }
  }

  TEST_CASE("no table for other types") {
    CHECK_THROWS_AS(orbit_table(RootDatum(CartanType::parse("F4"))), std::runtime_error);
  }

  TEST_CASE("CSV round trip with partition labels") {
    const RootDatum d(CartanType::parse("B2"));
    const auto table = orbit_table(d);
    const auto again = parse_orbit_csv(orbit_table_csv(table));
    REQUIRE(again.size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      CHECK(again[i].label == table[i].label);
      CHECK(again[i].standard_levi == table[i].standard_levi);
      CHECK(again[i].lc_count == table[i].lc_count);
    }
    REQUIRE(find_orbit(table, "[3,1,1]") != nullptr);
    CHECK(find_orbit(table, "[3,1,1]")->component_group == "Z/2");
  }

  TEST_CASE("closure order") {
    const auto a2 = orbit_table(RootDatum(CartanType::parse("A2")));
    const auto& zero = *find_orbit(a2, "[1,1,1]");
    const auto& sub = *find_orbit(a2, "[2,1]");
    const auto& reg = *find_orbit(a2, "[3]");
    CHECK(closure_leq(zero, sub));
    CHECK(closure_leq(sub, reg));
    CHECK_FALSE(closure_leq(reg, sub));
    const auto g2 = orbit_table(RootDatum(CartanType::parse("G2")));
    CHECK(closure_leq(*find_orbit(g2, "A1"), *find_orbit(g2, "A1~")));
  }

  TEST_CASE("unknown left cell counts stay unknown") {
    const auto c3 = orbit_table(RootDatum(CartanType::parse("C3")));
    const auto* r = find_orbit(c3, "[4,2]");
    REQUIRE(r != nullptr);
    CHECK_FALSE(lc_prediction(*r).has_value());
    CHECK_FALSE(r->verified());
    CHECK_FALSE(r->standard_levi.has_value());
  }

  TEST_CASE("malformed rows are rejected") {
    CHECK_THROWS(parse_orbit_csv("label,dim_orbit,dim_springer,euler,component_group,standard_levi,lc_count,provenance\n"
                                 "x,notanumber,0,1,trivial,none,1,test\n"));
  }

  TEST_CASE("matching cells to orbits in affine A2") {
    const AffineWeylGroup g(RootDatum(CartanType::parse("A2")));
    const Ball ball(g, 16);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    const auto p = cell_partition(kl, {16, 2, 12});
    const AFunction a(kl, p.two_sided, {3, 4, 5});
    const auto m = match_cells_to_orbits(p, a, ball, orbit_table(g.datum()));
    CHECK(m.order_compatible);
    REQUIRE(m.cell_to_orbit.size() == 3);
    CHECK(m.cell_to_orbit.at(p.two_sided[0]) == "[3]");
    CHECK(m.cell_to_orbit.at(p.two_sided[1]) == "[2,1]");
    CHECK(m.cell_to_orbit.at(p.two_sided[static_cast<std::size_t>(ball.size() - 1)]) == "[1,1,1]");
  }
}
