#include <doctest.h>

#include <set>

#include "affcells/cells.hpp"
#include "properties.hpp"

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

TEST_SUITE("cells") {
  TEST_CASE("affine A1") {
    const Fixture f("A1", 12, 8);
    CHECK(f.p.num_two_sided == 2);
    CHECK(f.p.left_members(f.p.left[0]).size() == 1);
    CHECK(f.p.complete_left_cells_of(f.p.two_sided[1]).size() == 2);
    CHECK(f.p.two_sided_bounded[static_cast<std::size_t>(f.p.two_sided[0])]);
    const auto order = two_sided_order(f.p);
    REQUIRE(order.size() == 1);
    CHECK(order[0] == std::make_pair(f.p.two_sided[0], f.p.two_sided[1]));
  }

  TEST_CASE("left cells have constant left descents") {
    const Fixture f("B2", 14, 10);
    for (int c = 0; c < f.p.num_left; ++c) {
      std::set<std::uint32_t> descents;
      for (int x : f.p.left_members(c)) descents.insert(f.ball.left_descents(x));
      CHECK(descents.size() == 1);
    }
  }

  TEST_CASE("lowest cell closed form against the mu graph") {
    const Fixture f("A2", 16, 12);
    const int lowest = f.p.two_sided[static_cast<std::size_t>(f.ball.size() - 1)];
    const int core_end = f.ball.count_up_to(12);
    long mismatches = 0;
    for (int x = 0; x < core_end; ++x) {
      const bool closed = lowest_cell_member(f.g.alcove_of(f.ball[x]));
      if (closed != (f.p.two_sided[static_cast<std::size_t>(x)] == lowest)) ++mismatches;
    }
    CHECK(mismatches == 0);
    // Each complete lowest left cell is one chamber's share of the lowest cell.
    const auto descriptors = lowest_cell_left_cells(f.g.datum());
    CHECK(descriptors.size() == 6);
    for (int c : f.p.complete_left_cells_of(lowest)) {
      const auto members = f.p.left_members(c);
      const auto chamber = f.g.chamber_of(f.g.alcove_of(f.ball[members.front()]));
      for (int x = 0; x < core_end; ++x) {
        const bool in_cell = f.p.left[static_cast<std::size_t>(x)] == c;
        CHECK(in_cell == LowestLeftCell{chamber}.contains(f.g, f.g.alcove_of(f.ball[x])));
      }
    }
  }

  TEST_CASE("canonical left cells") {
    const Fixture f("A2", 16, 12);
    const auto canon = canonical_left_cells(f.p, f.ball);
    CHECK(canon.size() == 3);
    CHECK(canon.at(f.p.two_sided[0]) == f.p.left[0]);
  }

  TEST_CASE("dominant lowest involution") {
    for (auto [name, len] : {std::pair{"A2", 5}, {"B2", 10}, {"G2", 26}}) {
      CAPTURE(name);
      const AffineWeylGroup g(RootDatum(CartanType::parse(name)));
      const auto w = dominant_lowest_involution(g);
      CHECK(w.length == len);
      CHECK(g.multiply(w, w) == g.identity());
      CHECK(g.is_dominant(g.alcove_of(w)));
      CHECK(lowest_cell_member(g.alcove_of(w)));
    }
  }

  TEST_CASE("inversion exchanges left and right cells") {
    const Fixture f("G2", 14, 10);
    const auto t = props::cells_under_inversion(f.p, f.ball);
    CHECK_MESSAGE(t.violations == 0, t.first);
  }

  TEST_CASE("window validation") {
    const AffineWeylGroup g(RootDatum(CartanType::parse("A2")));
    const Ball ball(g, 6);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    CHECK_THROWS_AS(cell_partition(kl, {7, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(cell_partition(kl, {6, 2, 5}), std::invalid_argument);
  }
}
