#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "affcells/affine.hpp"
#include "affcells/hecke.hpp"

namespace affcells {

/// Window geometry for a cell computation.
///
/// Classes are computed on the whole ball (radius) and again on the induced
/// subgraph of length <= radius - check_margin. Only elements of length
/// <= core_radius are trusted.
struct WindowSpec {
  int radius = 0;
  int check_margin = 2;
  int core_radius = 0;
};

/// Cells on a ball.
///
/// Handedness: alcoves come from the left action g -> g(A_0), and a left cell is a
/// class of the preorder generated by x <= y when mu(x, y) != 0 (either order) and
/// R(x) is not contained in R(y). Its elements share the left descent set, so its
/// alcoves lie on a fixed side of each simple wall through 0 and of the wall of s_0;
/// right cells are the inverses.
struct CellPartition {
  WindowSpec window;
  std::vector<int> left, right, two_sided;  // class id per ball element
  int num_left = 0, num_right = 0, num_two_sided = 0;
  /// Meets the core and its core part is the same in both windows.
  std::vector<bool> left_complete, two_sided_complete;
  /// Lies inside the core and is unchanged in the smaller window: a finite cell seen whole.
  std::vector<bool> left_bounded, two_sided_bounded;
  /// geq[a][b]: two-sided class a lies above b (reflexive, transitive).
  std::vector<std::vector<bool>> geq;

  std::vector<int> left_members(int c) const;
  std::vector<int> two_sided_members(int c) const;
  std::vector<int> left_cells_of(int omega) const;
  /// Complete left cells of omega that meet the core.
  std::vector<int> complete_left_cells_of(int omega) const;
  int core_count(const Ball& ball, const std::vector<int>& members) const;
};

CellPartition cell_partition(const KLTable& table, const WindowSpec& window);

/// Strict relations (a, b) with a above b in the two-sided order.
std::vector<std::pair<int, int>> two_sided_order(const CellPartition& partition);

/// The left cell of omega whose alcoves are all dominant (left descents within {s_0}).
/// Throws std::runtime_error if there is none or more than one.
int canonical_left_cell(const CellPartition& partition, const Ball& ball, int omega);

/// Every complete two-sided cell's canonical left cell; every dominant core element
/// must lie in one of them, otherwise throws std::runtime_error.
std::map<int, int> canonical_left_cells(const CellPartition& partition, const Ball& ball);

/// Closed-form membership in the lowest two-sided cell: no coordinate k_alpha is 0,
/// i.e. the alcove meets no strip 0 < <x, alpha^vee> < 1.
bool lowest_cell_member(const Alcove& alcove);

/// A left cell of the lowest two-sided cell: its alcoves in one Weyl chamber.
struct LowestLeftCell {
  WeylElt chamber;
  bool contains(const AffineWeylGroup& group, const Alcove& alcove) const {
    return lowest_cell_member(alcove) && group.chamber_of(alcove) == chamber;
  }
};

/// One descriptor per chamber, in the order of the Weyl group enumeration.
std::vector<LowestLeftCell> lowest_cell_left_cells(const RootDatum& datum);

/// The lowest of the |W| alcoves around 2 rho, as an element: (w_0, 2 rho).
AffineElt dominant_lowest_involution(const AffineWeylGroup& group);

}  // namespace affcells
