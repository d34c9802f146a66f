#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcells/cells.hpp"
#include "affcells/orbits.hpp"
#include "affcells/repmodel.hpp"

namespace affcells {

enum class Verdict { kPass, kFail, kNotEvaluable };
const char* to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::kNotEvaluable;
  std::string detail;
};

/// Result of sending the labels of a block to left cells of a two-sided cell.
struct AssignmentReport {
  BlockModel block;
  std::string orbit;
  int omega = -1;
  int canonical = -1;  // canonical left cell of omega
  std::vector<std::optional<int>> assignment;      // per label: left cell
  std::vector<std::optional<int>> representative;  // per label: ball index of the alcove used
  std::vector<int> unresolved;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  bool precondition_met = true;

  const Check* check(std::string_view name) const;
};

/// Labels whose image must be the canonical left cell. With trivial A(e) this is the
/// class containing the label w_0; otherwise every label known to be fixed.
std::vector<int> canonical_labels(const BlockModel& block);

/// The recipe at the block's special point v: a label realized by an alcove w(A_0) lying
/// in the canonical left cell of omega goes to the left cell of w^{-1}(A_0).
AssignmentReport assign(const BlockModel& block, const CellPartition& partition, const Ball& ball, int omega);

/// Fibers of the assignment coincide with the A(e)-orbits on labels.
Verdict check_fibers(const AssignmentReport& report);
/// Every canonical label goes to the canonical left cell.
Verdict check_canonical(const AssignmentReport& report);

/// Dominant points of Q in fundamental-weight coordinates, by increasing height, up to max_height.
std::vector<SpecialPoint> dominant_root_lattice_points(const RootDatum& datum, int max_height);

struct AssignmentSearch {
  std::vector<AssignmentReport> reports;  // one per accepted special point
  std::vector<std::string> trace;
  /// Every accepted point gives the same label -> left cell map.
  Verdict independent = Verdict::kNotEvaluable;
};

/// Tries special points by increasing height until `wanted` of them satisfy the precondition.
AssignmentSearch assign_with_search(const AffineWeylGroup& group, const CellPartition& partition, const Ball& ball,
                                    const OrbitRecord& record, int omega, int wanted, int max_height);

struct LowestPoint {
  SpecialPoint v;
  bool accepted = false;
  std::string reason;
  /// chamber[w] = chamber of the alcove of (x w)^{-1}, x the translation by v.
  std::vector<WeylElt> chamber;
};

struct LowestReport {
  std::vector<LowestPoint> points;
  bool distinct = false;     // each accepted point hits |W| distinct chambers
  bool independent = false;  // accepted points agree
  bool passed() const { return distinct && independent; }
};

LowestReport check_lowest(const AffineWeylGroup& group, const std::vector<SpecialPoint>& v_choices);

/// The first `count` dominant points of Q deep enough for check_lowest.
std::vector<SpecialPoint> lowest_cell_points(const RootDatum& datum, int count);

/// The subregular block of G2: L0 goes to the cell of the alcove s_0(A_0); the S3-orbit of
/// three labels goes to the smallest left cell; the remaining fixed label takes the last cell.
AssignmentReport assign_g2_subregular(const CellPartition& partition, const Ball& ball);

/// Whether the alcove s_theta(A_0) around the origin is in the W_I-class of the alcove
/// labelled w_0, i.e. s_theta w_0 lies in W_I.
bool subregular_l0_in_w0_class(const RootDatum& datum, const std::vector<int>& levi);

}  // namespace affcells
