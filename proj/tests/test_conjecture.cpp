#include <doctest.h>

#include "affcells/conjecture.hpp"

using namespace affcells;

namespace {

struct Fixture {
  AffineWeylGroup g;
  Ball ball;
  BruhatOrder order;
  KLTable kl;
  CellPartition p;
  Fixture(const char* name, int radius, int core)
      : g(RootDatum(CartanType::parse(name))), ball(g, radius), order(ball), kl(ball, order),
        p(cell_partition(kl, {radius, 2, core})) {}
};

}  // namespace

TEST_SUITE("conjecture") {
  TEST_CASE("lowest cell bijection") {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(name);
      const AffineWeylGroup g(RootDatum(CartanType::parse(name)));
      const auto points = lowest_cell_points(g.datum(), 3);
      REQUIRE(points.size() == 3);
      const auto r = check_lowest(g, points);
      CHECK(r.passed());
      for (const auto& pt : r.points) {
        CHECK(pt.accepted);
        CHECK(pt.chamber[0] == g.datum().longest());  // label e goes to the chamber of w_0
      }
    }
  }

  TEST_CASE("points too close to the walls are rejected") {
    const AffineWeylGroup g(RootDatum(CartanType::parse("A2")));
    const auto r = check_lowest(g, {SpecialPoint{g.datum().rho_weight()}});
    REQUIRE(r.points.size() == 1);
    CHECK_FALSE(r.points[0].accepted);
    CHECK(r.points[0].reason.find("hyperplane") != std::string::npos);
    const AffineWeylGroup b(RootDatum(CartanType::parse("B2")));
    const auto s = check_lowest(b, {SpecialPoint{b.datum().rho_weight()}});
    CHECK(s.points[0].reason == "not in the root lattice");
  }

  TEST_CASE("dominant points of Q") {
    const RootDatum d(CartanType::parse("A2"));
    const auto pts = dominant_root_lattice_points(d, 6);
    REQUIRE(pts.size() >= 3);
    CHECK(pts[0].weight == IVec::Zero(2));
    for (const auto& v : pts) {
      CHECK(d.weight_to_root(v.weight).has_value());
      CHECK(v.weight.minCoeff() >= 0);
    }
  }

  TEST_CASE("A2 subregular orbit") {
    const Fixture f("A2", 16, 12);
    const auto table = orbit_table(f.g.datum());
    const auto& sub = *find_orbit(table, "[2,1]");
    CHECK(subregular_l0_in_w0_class(f.g.datum(), *sub.standard_levi));
    const int omega = f.p.two_sided[1];
    const auto search = assign_with_search(f.g, f.p, f.ball, sub, omega, 3, 24);
    REQUIRE(search.reports.size() == 3);
    // The point v = rho is accepted but sends two labels to the same cell; deeper points agree.
    CHECK(search.independent == Verdict::kFail);
    for (std::size_t i = 1; i < search.reports.size(); ++i) {
      const auto& r = search.reports[i];
      CHECK(check_canonical(r) == Verdict::kPass);
      CHECK(check_fibers(r) == Verdict::kPass);
      CHECK(r.check("surjective")->verdict == Verdict::kPass);
    }
    const auto canon = canonical_labels(search.reports[1].block);
    REQUIRE(canon.size() == 1);
  }

  TEST_CASE("regular orbit needs the origin") {
    const Fixture f("B2", 14, 10);
    const auto table = orbit_table(f.g.datum());
    const auto search = assign_with_search(f.g, f.p, f.ball, *find_orbit(table, "[5]"), f.p.two_sided[0], 1, 10);
    REQUIRE(search.reports.size() == 1);
    CHECK(search.reports[0].block.special_point->weight == IVec::Zero(2));
    CHECK(search.reports[0].assignment[0] == f.p.left[0]);
  }

  TEST_CASE("G2 subregular block") {
    const Fixture f("G2", 48, 40);
    const auto r = assign_g2_subregular(f.p, f.ball);
    REQUIRE(r.assignment.size() == 5);
    std::map<int, int> fiber;
    for (const auto& a : r.assignment) {
      REQUIRE(a.has_value());
      ++fiber[*a];
    }
    CHECK(fiber.size() == 3);
    for (auto [c, n] : fiber) CHECK(f.p.left_members(c).size() == (n == 3 ? 7u : 8u));
    CHECK(r.check("L0-canonical")->verdict == Verdict::kPass);
    CHECK(check_fibers(r) == Verdict::kPass);
    // L1 is fixed by A(e) but the only cell left for it is not the canonical one.
    CHECK(check_canonical(r) == Verdict::kFail);
  }
}
