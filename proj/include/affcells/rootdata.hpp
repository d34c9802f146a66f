#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcells/linalg.hpp"

namespace affcells {

/// Irreducible Cartan type, e.g. {'G', 2}.
struct CartanType {
  char series = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
  /// Parses "A2", "g2", "B3", ... Throws std::invalid_argument on bad input.
  static CartanType parse(std::string_view text);
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Names of every supported type, in the order they are listed to users.
std::vector<std::string> supported_types();

/// Handle to an element of the finite Weyl group of a RootDatum.
struct WeylElt {
  int index = 0;
  friend bool operator==(WeylElt, WeylElt) = default;
};

/// Immutable root-system context.
///
/// Roots are integer vectors in the simple-root basis and coroots integer
/// vectors in the simple-coroot basis. Weights are integer vectors in the
/// fundamental-weight basis, so the i-th coordinate of a weight is its pairing
/// with the i-th simple coroot. The Cartan matrix is A(i, j) = <alpha_j, alpha_i^vee>.
///
/// The finite Weyl group is enumerated eagerly; elements are referred to by
/// index and every structural table (multiplication, inverses, action on roots)
/// is precomputed.
class RootDatum {
 public:
  explicit RootDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IMat& cartan() const { return cartan_; }
  /// Squared lengths of the simple roots, normalized so the shortest is 1.
  const IVec& simple_root_norms() const { return norms_; }

  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IVec>& coroots() const { return coroots_; }
  /// Index of the simple root alpha_i among the positive roots.
  int simple_root_index(int i) const { return simple_index_[static_cast<std::size_t>(i)]; }
  /// Positive root whose coroot is the highest coroot (the highest short root).
  int highest_short_root() const { return theta_; }
  int coxeter_number() const { return 2 * num_positive_roots() / rank(); }
  std::int64_t weyl_order() const { return static_cast<std::int64_t>(weyl_.size()); }

  /// Fundamental weights and rho, written in the simple-root basis.
  std::vector<QVec> fundamental_weights() const;
  QVec rho() const;
  /// rho in the fundamental-weight basis: all ones.
  IVec rho_weight() const { return IVec::Ones(rank()); }

  /// <lambda, alpha^vee> for lambda in root coordinates and alpha a positive root index.
  std::int64_t pair_root_coords(const IVec& lambda, int alpha) const {
    return coroot_pairing_.row(alpha).dot(lambda);
  }
  /// <lambda, alpha^vee> for lambda in fundamental-weight coordinates.
  std::int64_t pair_weight(const IVec& lambda, int alpha) const {
    return coroots_[static_cast<std::size_t>(alpha)].dot(lambda);
  }
  /// Rows are the coroot pairings in root coordinates (N x rank).
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& coroot_pairing() const {
    return coroot_pairing_;
  }

  IVec root_to_weight(const IVec& root_coords) const { return cartan_ * root_coords; }
  QVec weight_to_root_rational(const IVec& weight) const;
  /// Root-lattice coordinates of a weight, or nullopt when it lies outside Q.
  std::optional<IVec> weight_to_root(const IVec& weight) const;

  // --- finite Weyl group -------------------------------------------------

  int weyl_size() const { return static_cast<int>(weyl_.size()); }
  WeylElt identity() const { return {0}; }
  WeylElt longest() const { return {longest_}; }
  WeylElt simple_reflection(int i) const { return {simple_refl_[static_cast<std::size_t>(i)]}; }
  /// Reflection in the positive root with the given index.
  WeylElt reflection(int alpha) const { return {reflections_[static_cast<std::size_t>(alpha)]}; }

  WeylElt multiply(WeylElt a, WeylElt b) const {
    return {mult_[static_cast<std::size_t>(a.index * weyl_size() + b.index)]};
  }
  WeylElt inverse(WeylElt w) const { return {weyl_[static_cast<std::size_t>(w.index)].inverse}; }
  int length(WeylElt w) const { return weyl_[static_cast<std::size_t>(w.index)].length; }
  /// Lexicographically first reduced word (simple reflections numbered 1..rank).
  const std::vector<int>& word(WeylElt w) const { return weyl_[static_cast<std::size_t>(w.index)].word; }
  /// Action on root coordinates.
  const IMat& matrix(WeylElt w) const { return weyl_[static_cast<std::size_t>(w.index)].on_roots; }
  /// Action on fundamental-weight coordinates.
  const IMat& weight_matrix(WeylElt w) const { return weyl_[static_cast<std::size_t>(w.index)].on_weights; }
  /// Bitmask over positive roots alpha with w^{-1}(alpha) < 0.
  std::uint64_t inverse_inversions(WeylElt w) const {
    return weyl_[static_cast<std::size_t>(w.index)].inv_inversions;
  }
  /// The element whose inverse-inversion mask equals `mask`, if any.
  std::optional<WeylElt> from_inverse_inversions(std::uint64_t mask) const;
  /// Whether the image of positive root alpha under w is negative.
  bool sends_negative(WeylElt w, int alpha) const {
    return (inverse_inversions(inverse(w)) >> alpha) & 1U;
  }
  /// Subgroup generated by the simple reflections listed in `simple` (1-based).
  std::vector<WeylElt> parabolic_subgroup(const std::vector<int>& simple) const;

 private:
  struct Element {
    IMat on_roots;
    IMat on_weights;
    std::vector<int> word;
    int length = 0;
    int inverse = 0;
    std::uint64_t inv_inversions = 0;
  };

  void build_roots();
  void build_weyl();

  CartanType type_;
  IMat cartan_;
  IVec norms_;
  std::vector<IVec> pos_roots_;
  std::vector<IVec> coroots_;
  std::vector<int> simple_index_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> coroot_pairing_;
  int theta_ = 0;
  IMat cartan_adj_;
  std::int64_t cartan_det_ = 1;

  std::vector<Element> weyl_;
  std::vector<int> mult_;
  std::vector<int> simple_refl_;
  std::vector<int> reflections_;
  int longest_ = 0;
};

/// Builds the root datum of an irreducible type of rank at most 4.
/// Throws std::invalid_argument naming the supported types otherwise.
RootDatum build_root_datum(char series, int rank);

/// All elements of W, identity first, in breadth-first (length) order.
std::vector<WeylElt> enumerate_weyl(const RootDatum& datum);

/// w . lambda = w(lambda + rho) - rho, lambda in fundamental-weight coordinates.
IVec dot_action(const RootDatum& datum, WeylElt w, const IVec& lambda);

}  // namespace affcells
