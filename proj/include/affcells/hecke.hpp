#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "affcells/affine.hpp"
#include "affcells/laurent.hpp"

namespace affcells {

/// Tag written into persisted tables; bump when any convention below changes.
///
/// Conventions: alcoves by the left action, P_{x,y} in q, basis products in the
/// C' basis (v^2 = q) where C'_s C'_w = (v + v^-1) C'_w when sw < w, so that all
/// structure constants have nonnegative coefficients.
inline constexpr const char* kConventionTag = "left-action/Cprime-positive/v1";

/// Thrown when a Kazhdan-Lusztig polynomial violates the degree bound or positivity.
struct KLInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All Kazhdan-Lusztig polynomials P_{x,y} for x, y in a ball.
///
/// Polynomials are interned in a pool; the table keeps one pool id per pair.
/// mu_list(y) holds every z < y with mu(z, y) != 0.
class KLTable {
 public:
  KLTable(const Ball& ball, const BruhatOrder& order);

  const Ball& ball() const { return *ball_; }
  const BruhatOrder& order() const { return *order_; }
  int size() const { return n_; }

  /// P_{x,y} in q; zero unless x <= y.
  const LaurentPoly& P(int x, int y) const { return pool_[ids_[idx(x, y)]]; }
  /// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} for x < y, 0 otherwise.
  int mu(int x, int y) const;
  /// mu(x, y) if x < y, mu(y, x) if y < x.
  int mu_sym(int x, int y) const { return x < y ? mu(x, y) : mu(y, x); }
  /// Degree of P_{1,w}.
  int delta(int w) const { return P(0, w).degree(); }
  const std::vector<std::pair<int, int>>& mu_list(int y) const { return mu_lists_[static_cast<std::size_t>(y)]; }
  std::size_t distinct_polynomials() const { return pool_.size(); }

  /// Writes rows "x-key,y-key,c0 c1 ..." for all x <= y.
  void save_csv(const std::filesystem::path& path) const;
  /// Compares every stored row with the table; returns false on any mismatch or missing row.
  bool matches_csv(const std::filesystem::path& path) const;

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x); }
  std::uint32_t intern(const LaurentPoly& p);

  const Ball* ball_;
  const BruhatOrder* order_;
  int n_;
  std::vector<std::uint32_t> ids_;
  std::vector<LaurentPoly> pool_;
  std::map<std::vector<std::int64_t>, std::uint32_t> pool_index_;
  std::vector<std::vector<std::pair<int, int>>> mu_lists_;
};

/// File name used for a cached table: kl_<type>_<convention>_r<radius>.csv.
std::string kl_cache_name(const std::string& type, int radius);

/// Element of the Hecke algebra in the C' basis: ball index -> coefficient in v.
using HeckeElt = std::map<int, LaurentPoly>;

struct ProductResult {
  HeckeElt terms;
  /// Set when l(x) + l(y) exceeds the ball radius, so terms may be missing.
  bool partial = false;
};

/// C'_x C'_y expanded in the C' basis.
ProductResult kl_product(const KLTable& table, int x, int y);

/// Left multiplication by C'_x for every x of length at most max_len, applied to C'_y.
/// Entry x of the result is C'_x C'_y (empty where l(x) > max_len).
std::vector<HeckeElt> left_products(const KLTable& table, int y, int max_len);

/// For each z, the largest v-degree of h_{x,y,z} over l(x), l(y) <= k (-1 if never reached).
std::vector<int> raw_a_values(const KLTable& table, int k);

struct AValue {
  int value = 0;
  bool certified = false;
};

/// The a-function on a ball.
///
/// Raw values are maximized over each class of `two_sided` (window cells refine the
/// true cells, so this is still a lower bound). A class is certified when its value
/// reaches the ceiling N, or when it is the same at every level in `levels`.
class AFunction {
 public:
  AFunction(const KLTable& table, const std::vector<int>& two_sided, const std::vector<int>& levels);

  AValue operator()(int z) const { return values_[static_cast<std::size_t>(z)]; }
  const std::vector<int>& levels() const { return levels_; }
  /// Per-level class maxima, indexed [level][class].
  const std::vector<std::vector<int>>& history() const { return history_; }

 private:
  std::vector<int> levels_;
  std::vector<std::vector<int>> history_;
  std::vector<AValue> values_;
};

struct Distinguished {
  bool flag = false;
  bool certified = false;
};

/// w is distinguished iff a(w) = l(w) - 2 delta(w).
Distinguished is_distinguished(const KLTable& table, const AFunction& a, int w);

}  // namespace affcells
