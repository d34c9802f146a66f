#pragma once

// Slow reference implementations used only by the tests. They rely on group
// multiplication and lengths, never on Ball, BruhatOrder or KLTable.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "affcells/affine.hpp"

namespace oracle {

using affcells::AffineElt;
using affcells::AffineWeylGroup;

/// Laurent polynomial as exponent -> coefficient, zero entries removed.
using Poly = std::map<int, std::int64_t>;

Poly add(const Poly& a, const Poly& b, std::int64_t k = 1, int shift = 0);
Poly mul(const Poly& a, const Poly& b);
void trim(Poly& p);

/// Elements of length <= radius by breadth-first search over generators.
class NaiveBall {
 public:
  NaiveBall(const AffineWeylGroup& group, int radius);
  int size() const { return static_cast<int>(elements_.size()); }
  const AffineElt& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int find(const AffineElt& a) const;  // -1 when absent
  const AffineWeylGroup& group() const { return *group_; }

 private:
  static std::vector<std::int64_t> key(const AffineElt& a);
  const AffineWeylGroup* group_;
  std::vector<AffineElt> elements_;
  std::map<std::vector<std::int64_t>, int> index_;
};

/// x <= y iff x is the product of some subword of a reduced word of y.
bool subword_leq(const AffineWeylGroup& group, const AffineElt& x, const AffineElt& y);

/// P_{x,y} from R-polynomials: q^{l(y)-l(x)} bar(P_{x,y}) - P_{x,y} = sum_{x<z<=y} R_{x,z} P_{z,y}.
class RPolyKL {
 public:
  explicit RPolyKL(const NaiveBall& ball);
  bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }
  /// Coefficients in q, lowest degree first.
  std::vector<std::int64_t> P(int x, int y) const;

 private:
  const Poly& R(int x, int y);
  int rmul(int x, int s) const;
  const NaiveBall* ball_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::pair<int, int>, Poly> r_;
  std::vector<std::vector<Poly>> p_;
};

/// C'_x C'_y computed in the standard basis H_w with (H_s + v)(H_s - v^{-1}) = 0, then
/// rewritten in the C' basis. Keys are ball indices of the oracle ball.
std::map<int, Poly> product(const NaiveBall& ball, const RPolyKL& kl, int x, int y);

}  // namespace oracle
