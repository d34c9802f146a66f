#include <doctest.h>

#include <set>

#include "affcells/affine.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace affcells;

namespace {
AffineWeylGroup group_of(const char* name) { return AffineWeylGroup(RootDatum(CartanType::parse(name))); }
}  // namespace

TEST_SUITE("affine") {
  TEST_CASE("generators") {
    const auto g = group_of("A2");
    for (int s = 0; s < g.num_generators(); ++s) {
      CHECK(g.generator(s).length == 1);
      CHECK(g.key(g.generator(s)) == "s" + std::to_string(s));
    }
    CHECK(g.key(g.identity()) == "e");
  }

  TEST_CASE("growth series matches breadth-first search") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
      CAPTURE(name);
      const auto g = group_of(name);
      const int radius = g.rank() == 3 ? 6 : 10;
      const oracle::NaiveBall naive(g, radius);
      const Ball ball(g, radius);
      CHECK(ball.size() == naive.size());
      auto series = g.growth_series(radius);
      std::int64_t total = 0;
      for (auto c : series) total += c;
      CHECK(total == naive.size());
      for (int i = 0; i < naive.size(); ++i) CHECK(ball.find(naive[i]).has_value());
    }
  }

  TEST_CASE("ball neighbour tables") {
    const auto g = group_of("B2");
    const Ball ball(g, 8);
    for (int x = 0; x < ball.size(); ++x)
      for (int s = 0; s < g.num_generators(); ++s) {
        const int r = ball.rmul(x, s), l = ball.lmul(x, s);
        if (r >= 0) CHECK(ball[r] == g.multiply(ball[x], g.generator(s)));
        if (l >= 0) CHECK(ball[l] == g.multiply(g.generator(s), ball[x]));
        CHECK((((ball.right_descents(x) >> s) & 1U) != 0) == (r >= 0 && ball.length(r) < ball.length(x)));
      }
    for (int x = 0; x < ball.size(); ++x) CHECK(ball.inverse(ball.inverse(x)) == x);
  }

  TEST_CASE("element cap aborts") {
    const auto g = group_of("G2");
    CHECK_THROWS(Ball(g, 30, 100));
  }

  TEST_CASE("keys round trip") {
    const auto g = group_of("G2");
    const Ball ball(g, 9);
    for (int x = 0; x < ball.size(); ++x) CHECK(g.parse_key(g.key(ball[x])) == ball[x]);
    CHECK(g.parse_key("s1s1") == g.identity());
    CHECK_THROWS_AS(g.parse_key("s9"), std::invalid_argument);
  }

  TEST_CASE("alcoves") {
    const auto g = group_of("A2");
    CHECK((g.alcove_of(g.identity()).coords.array() == 0).all());
    const Ball ball(g, 8);
    for (int x = 0; x < ball.size(); ++x) {
      const Alcove a = g.alcove_of(ball[x]);
      CHECK(g.element_of_alcove(a) == ball[x]);
      CHECK(a.coords.cwiseAbs().sum() == ball.length(x));
    }
    Alcove bad = g.alcove_of(g.identity());
    bad.coords(0) = 1;  // violates the compatibility k_{a+b} in {k_a + k_b, k_a + k_b + 1}
    bad.coords(1) = 1;
    bad.coords(2) = 0;
    CHECK_FALSE(g.is_alcove(bad));
    CHECK_THROWS_AS(g.element_of_alcove(bad), std::invalid_argument);
  }

  TEST_CASE("alcoves around a special point") {
    for (const char* name : {"A2", "B2", "G2"}) {
      CAPTURE(name);
      const auto g = group_of(name);
      const auto& d = g.datum();
      const auto origin = g.alcoves_around(SpecialPoint::origin(d));
      CHECK(static_cast<int>(origin.size()) == d.weyl_size());
      std::set<int> chambers;
      for (const auto& la : origin) {
        CHECK(g.chamber_of(la.alcove) == la.label);
        chambers.insert(la.label.index);
      }
      CHECK(static_cast<int>(chambers.size()) == d.weyl_size());
      SpecialPoint v{2 * d.rho_weight()};
      for (const auto& la : g.alcoves_around(v)) CHECK(g.is_alcove(la.alcove));
    }
  }

  TEST_CASE("special points must lie on a vertex of every root direction") {
    const auto g = group_of("A2");
    QVec third = QVec::Zero(2);
    third(0) = Rational(1, 3);
    CHECK_THROWS_AS(SpecialPoint::from_root_coords(g.datum(), third), std::invalid_argument);
    QVec w1(2);
    w1(0) = Rational(2, 3);
    w1(1) = Rational(1, 3);
    CHECK(SpecialPoint::from_root_coords(g.datum(), w1).weight == IVec::Unit(2, 0));
  }

  TEST_CASE("Bruhat order agrees with the subword property") {
    for (const char* name : {"A2", "B2", "G2"}) {
      CAPTURE(name);
      const auto g = group_of(name);
      const Ball ball(g, 6);
      const BruhatOrder order(ball);
      long mismatches = 0;
      for (int y = 0; y < ball.size(); ++y)
        for (int x = 0; x < ball.size(); ++x)
          if (order.leq(x, y) != oracle::subword_leq(g, ball[x], ball[y])) ++mismatches;
      CHECK(mismatches == 0);
      CHECK(bruhat_leq(g, ball[1], ball[ball.size() - 1]) == order.leq(1, ball.size() - 1));
    }
  }

  TEST_CASE("dot action of a translation") {
    const auto g = group_of("A2");
    const IVec theta = g.datum().positive_roots()[static_cast<std::size_t>(g.datum().highest_short_root())];
    const IVec lambda = IVec::Zero(2);
    CHECK(g.dot_action(g.translation(theta), lambda) == g.datum().root_to_weight(theta));
  }
}
