#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affcells/linalg.hpp"
#include "affcells/rootdata.hpp"

namespace affcells {

/// Element (w, t) of W_a = W x| Q acting by x -> w(x) + t, t in root coordinates.
struct AffineElt {
  WeylElt finite;
  IVec translation;
  int length = 0;  // cached word length

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.finite == b.finite && a.translation == b.translation;
  }
};

/// Alcove coordinates: coords(alpha) = k with k < <x, alpha^vee> < k + 1 on the interior.
struct Alcove {
  RootVec coords;
  friend bool operator==(const Alcove&, const Alcove&) = default;
};

/// A point of the weight lattice, where translates of every root hyperplane meet.
/// Stored in fundamental-weight coordinates.
struct SpecialPoint {
  IVec weight;

  /// Validates a point given in simple-root coordinates; throws std::invalid_argument
  /// when some pairing with a coroot is not an integer.
  static SpecialPoint from_root_coords(const RootDatum& datum, const QVec& point);
  static SpecialPoint origin(const RootDatum& datum) { return {IVec::Zero(datum.rank())}; }
};

struct LabelledAlcove {
  WeylElt label;
  Alcove alcove;
};

/// Descent sets as bitmasks over the generators s_0 .. s_rank (bit i is s_i).
struct Descents {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

/// The affine Weyl group W x| Q with its Coxeter generators.
///
/// Generator 0 is the affine reflection s_0(x) = s_theta(x) + theta in the upper
/// wall <x, theta^vee> = 1 of the fundamental alcove (theta the highest short
/// root); generators 1..rank are the simple reflections of W. Alcoves are
/// attached to elements by the left action: alcove_of(g) = g(A_0).
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_generators() const { return datum_.rank() + 1; }

  AffineElt identity() const;
  AffineElt generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }
  /// Element with the given parts; its cached length is computed.
  AffineElt make(WeylElt w, const IVec& translation) const;
  AffineElt translation(const IVec& root_coords) const { return make(datum_.identity(), root_coords); }
  AffineElt from_word(const std::vector<int>& word) const;

  AffineElt multiply(const AffineElt& a, const AffineElt& b) const;
  AffineElt inverse(const AffineElt& a) const;
  /// Number of hyperplanes separating A_0 from (w, t)(A_0): sum over positive roots.
  int length(WeylElt w, const IVec& translation) const;
  Descents descents(const AffineElt& a) const;
  /// Lexicographically first reduced word over the generators 0..rank.
  std::vector<int> reduced_word(const AffineElt& a) const;
  /// Printable key: "e" or the reduced word as "s0s1s2".
  std::string key(const AffineElt& a) const;
  /// Inverse of key(); accepts any (not necessarily reduced) word.
  AffineElt parse_key(std::string_view key) const;

  Alcove alcove_of(const AffineElt& a) const;
  /// Throws std::invalid_argument when the coordinates are not those of an alcove.
  AffineElt element_of_alcove(const Alcove& alcove) const;
  bool is_alcove(const Alcove& alcove) const;
  /// The w in W whose chamber w(C) contains the alcove.
  WeylElt chamber_of(const Alcove& alcove) const;
  bool is_dominant(const Alcove& alcove) const { return (alcove.coords.array() >= 0).all(); }
  /// The |W| alcoves whose closures contain v; the alcove v + u(A_0) carries label u.
  std::vector<LabelledAlcove> alcoves_around(const SpecialPoint& v) const;
  Alcove alcove_around(const SpecialPoint& v, WeylElt label) const;

  /// (w, t) . lambda = w(lambda + rho) + t - rho in fundamental-weight coordinates.
  IVec dot_action(const AffineElt& a, const IVec& lambda) const;

  /// Number of elements of each length 0..max_length, from Bott's formula.
  std::vector<std::int64_t> growth_series(int max_length) const;

 private:
  RootDatum datum_;
  std::vector<AffineElt> generators_;
};

/// Bruhat order test through the lifting property; cost linear in the length of y.
bool bruhat_leq(const AffineWeylGroup& group, const AffineElt& x, const AffineElt& y);

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

/// All elements of length at most `radius`, sorted by (length, finite part, translation).
///
/// Holds a pointer to the group, which must outlive the ball. Neighbour tables
/// store -1 where a product leaves the ball.
class Ball {
 public:
  Ball(const AffineWeylGroup& group, int radius, std::size_t cap = kDefaultBallCap);

  const AffineWeylGroup& group() const { return *group_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const AffineElt& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<AffineElt>& elements() const { return elements_; }
  std::optional<int> find(const AffineElt& a) const;
  int index_of(const AffineElt& a) const;  // throws std::out_of_range

  int length(int i) const { return elements_[static_cast<std::size_t>(i)].length; }
  int rmul(int i, int s) const { return rmul_[static_cast<std::size_t>(i * ngens_ + s)]; }
  int lmul(int i, int s) const { return lmul_[static_cast<std::size_t>(i * ngens_ + s)]; }
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
  std::uint32_t left_descents(int i) const { return desc_[static_cast<std::size_t>(i)].left; }
  std::uint32_t right_descents(int i) const { return desc_[static_cast<std::size_t>(i)].right; }
  /// Index range [begin, end) of the elements of length l.
  std::pair<int, int> layer(int l) const;
  /// Number of elements of length at most r (r <= radius).
  int count_up_to(int r) const { return layer(r).second; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept;
  };
  static std::vector<std::int64_t> key_of(const AffineElt& a);

  const AffineWeylGroup* group_;
  int radius_;
  int ngens_;
  std::vector<AffineElt> elements_;
  std::vector<int> layer_start_;
  std::unordered_map<std::vector<std::int64_t>, int, KeyHash> index_;
  std::vector<int> rmul_, lmul_, inverse_;
  std::vector<Descents> desc_;
};

/// Bruhat order on a ball as one bitset of lower elements per element.
class BruhatOrder {
 public:
  explicit BruhatOrder(const Ball& ball);
  bool leq(int x, int y) const {
    return (rows_[static_cast<std::size_t>(y) * words_ + static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1U;
  }
  /// Elements below y, in increasing index order.
  std::vector<int> below(int y) const;

 private:
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace affcells
