#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "affcells/hecke.hpp"
#include "oracles.hpp"

using namespace affcells;

namespace {

AffineWeylGroup group_of(const char* name) { return AffineWeylGroup(RootDatum(CartanType::parse(name))); }

oracle::Poly to_poly(const LaurentPoly& p) {
  oracle::Poly out;
  for (int e = p.valuation(); !p.is_zero() && e <= p.degree(); ++e)
    if (p.coeff(e)) out[e] = p.coeff(e);
  return out;
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("KL polynomials agree with the R-polynomial oracle") {
    for (const char* name : {"A2", "B2", "G2"}) {
      CAPTURE(name);
      const auto g = group_of(name);
      const Ball ball(g, 7);
      const BruhatOrder order(ball);
      const KLTable kl(ball, order);
      const oracle::NaiveBall nb(g, 7);
      const oracle::RPolyKL ref(nb);
      long mismatches = 0;
      for (int y = 0; y < nb.size(); ++y)
        for (int x = 0; x < nb.size(); ++x) {
          const int bx = ball.index_of(nb[x]), by = ball.index_of(nb[y]);
          if (ref.leq(x, y) != order.leq(bx, by) || ref.P(x, y) != kl.P(bx, by).coefficients()) ++mismatches;
        }
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("a nontrivial polynomial appears in the A2 ball") {
    const auto g = group_of("A2");
    const Ball ball(g, 8);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    int nontrivial = 0;
    for (int y = 0; y < ball.size(); ++y)
      for (int x : order.below(y))
        if (kl.P(x, y).degree() > 0) ++nontrivial;
    CHECK(nontrivial > 0);
    CHECK(kl.distinct_polynomials() > 2);
  }

  TEST_CASE("C' products agree with the standard basis oracle") {
    for (const char* name : {"A2", "B2"}) {
      CAPTURE(name);
      const auto g = group_of(name);
      const int radius = 7;
      const Ball ball(g, radius);
      const BruhatOrder order(ball);
      const KLTable kl(ball, order);
      const oracle::NaiveBall nb(g, radius);
      const oracle::RPolyKL ref(nb);
      long compared = 0, mismatches = 0;
      for (int x = 1; x < ball.size(); ++x)
        for (int y = 1; y < ball.size(); ++y) {
          if (ball.length(x) + ball.length(y) > radius || ball.length(x) > 3) continue;
          const auto got = kl_product(kl, x, y);
          REQUIRE_FALSE(got.partial);
          const auto want = oracle::product(nb, ref, nb.find(ball[x]), nb.find(ball[y]));
          std::map<int, oracle::Poly> mapped;
          for (const auto& [z, c] : got.terms) mapped[nb.find(ball[z])] = to_poly(c);
          ++compared;
          if (mapped != want) ++mismatches;
        }
      CHECK(compared > 50);
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("structure constants are bar invariant and positive") {
    const auto g = group_of("G2");
    const Ball ball(g, 12);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    for (int y = 0; y < ball.count_up_to(6); ++y) {
      const auto prods = left_products(kl, y, 12 - ball.length(y));
      for (const auto& h : prods)
        for (const auto& [z, c] : h) {
          CHECK(c.bar() == c);
          CHECK(c.nonnegative());
        }
    }
  }

  TEST_CASE("products beyond the window are flagged") {
    const auto g = group_of("A2");
    const Ball ball(g, 6);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    const auto r = kl_product(kl, ball.size() - 1, ball.size() - 1);
    CHECK(r.partial);
    const auto s = kl_product(kl, 1, 1);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.at(1) == LaurentPoly(-1, {1, 0, 1}));
  }

  TEST_CASE("a-values in affine A1") {
    const auto g = group_of("A1");
    const Ball ball(g, 10);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    std::vector<int> classes(static_cast<std::size_t>(ball.size()), 1);
    classes[0] = 0;
    const AFunction a(kl, classes, {1, 2, 3});
    CHECK(a(0).value == 0);
    CHECK(a(0).certified);
    CHECK(a(1).value == 1);
    CHECK(a(1).certified);
    for (int x = 0; x < ball.size(); ++x) {
      const auto d = is_distinguished(kl, a, x);
      CHECK(d.flag == (ball.length(x) <= 1));  // e, s0 and s1
    }
  }

  TEST_CASE("tables persist as CSV") {
    const auto g = group_of("B2");
    const Ball ball(g, 6);
    const BruhatOrder order(ball);
    const KLTable kl(ball, order);
    const auto dir = std::filesystem::temp_directory_path() / "affcells_test_cache";
    std::filesystem::create_directories(dir);
    const auto path = dir / kl_cache_name("B2", 6);
    kl.save_csv(path);
    CHECK(kl.matches_csv(path));
    std::ofstream(path, std::ios::app) << "e,e,2\n";
    CHECK_FALSE(kl.matches_csv(path));
    CHECK_FALSE(kl.matches_csv(dir / "missing.csv"));
    CHECK(kl_cache_name("B2", 6).find("left-action-Cprime-positive-v1") != std::string::npos);
    std::filesystem::remove_all(dir);
  }
}
