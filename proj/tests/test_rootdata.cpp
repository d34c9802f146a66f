#include <doctest.h>

#include <map>
#include <set>

#include "affcells/rootdata.hpp"

using namespace affcells;

TEST_SUITE("rootdata") {
  TEST_CASE("orders, root counts and Coxeter numbers") {
    const std::map<std::string, std::array<int, 3>> expect{
        {"A1", {2, 1, 2}},  {"A2", {6, 3, 3}},    {"A3", {24, 6, 4}},  {"B2", {8, 4, 4}},
        {"B3", {48, 9, 6}}, {"C3", {48, 9, 6}},   {"G2", {12, 6, 6}},  {"D4", {192, 12, 6}},
        {"F4", {1152, 24, 12}}};
    for (const auto& [name, e] : expect) {
      CAPTURE(name);
      const RootDatum d(CartanType::parse(name));
      CHECK(d.weyl_order() == e[0]);
      CHECK(d.num_positive_roots() == e[1]);
      CHECK(d.coxeter_number() == e[2]);
      CHECK(d.length(d.longest()) == e[1]);
    }
  }

  TEST_CASE("Cartan matrix") {
    const RootDatum g2(CartanType::parse("G2"));
    for (int i = 0; i < 2; ++i) CHECK(g2.cartan()(i, i) == 2);
    CHECK(g2.cartan()(0, 1) * g2.cartan()(1, 0) == 3);
    const RootDatum b2(CartanType::parse("B2"));
    CHECK(b2.cartan()(0, 1) * b2.cartan()(1, 0) == 2);
  }

  TEST_CASE("highest short root pairs to 2 with its own coroot") {
    for (const auto& name : {"A2", "B2", "B3", "C3", "G2"}) {
      CAPTURE(name);
      const RootDatum d(CartanType::parse(name));
      const int theta = d.highest_short_root();
      const IVec w = d.root_to_weight(d.positive_roots()[static_cast<std::size_t>(theta)]);
      CHECK(d.pair_weight(w, theta) == 2);
      // Short: every other root has norm at least as large, so theta's coefficients are maximal among short roots.
      CHECK(d.positive_roots()[static_cast<std::size_t>(theta)].minCoeff() >= 1);
    }
  }

  TEST_CASE("Weyl group tables") {
    const RootDatum d(CartanType::parse("B3"));
    for (int i = 1; i <= 3; ++i) {
      const WeylElt s = d.simple_reflection(i - 1);
      CHECK(d.multiply(s, s) == d.identity());
      CHECK(d.length(s) == 1);
    }
    const auto all = enumerate_weyl(d);
    CHECK(static_cast<int>(all.size()) == d.weyl_size());
    std::set<int> seen;
    for (auto w : all) {
      seen.insert(w.index);
      CHECK(d.multiply(w, d.inverse(w)) == d.identity());
      CHECK(d.from_inverse_inversions(d.inverse_inversions(w)) == w);
    }
    CHECK(static_cast<int>(seen.size()) == d.weyl_size());
  }

  TEST_CASE("dot action fixes -rho") {
    const RootDatum d(CartanType::parse("G2"));
    const IVec minus_rho = -d.rho_weight();
    for (auto w : enumerate_weyl(d)) CHECK(dot_action(d, w, minus_rho) == minus_rho);
  }

  TEST_CASE("parabolic subgroups") {
    const RootDatum d(CartanType::parse("A3"));
    CHECK(d.parabolic_subgroup({}).size() == 1);
    CHECK(d.parabolic_subgroup({1}).size() == 2);
    CHECK(d.parabolic_subgroup({1, 3}).size() == 4);
    CHECK(d.parabolic_subgroup({1, 2}).size() == 6);
    CHECK(d.parabolic_subgroup({1, 2, 3}).size() == 24);
  }

  TEST_CASE("weights and roots") {
    const RootDatum d(CartanType::parse("A2"));
    CHECK(d.weight_to_root(d.rho_weight()).has_value());  // rho = theta for A2
    IVec w1 = IVec::Zero(2);
    w1(0) = 1;
    CHECK_FALSE(d.weight_to_root(w1).has_value());
  }

  TEST_CASE("unsupported types are rejected") {
    CHECK_THROWS_AS(CartanType::parse("E6"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("Ax"), std::invalid_argument);
    CHECK(CartanType::parse("g2").name() == "G2");
  }
}
