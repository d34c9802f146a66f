#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affcells/affine.hpp"
#include "affcells/orbits.hpp"

namespace affcells {

/// W-orbits on X/pX under the dot action, weights in fundamental-weight coordinates mod p.
struct BlockParameters {
  int p = 0;
  std::vector<IVec> representatives;  // lexicographically least member of each orbit
  std::vector<int> orbit_sizes;
  std::optional<std::string> warning;  // set when p <= h, where regular blocks need not exist
  int count() const { return static_cast<int>(representatives.size()); }
};

BlockParameters block_parameters(const RootDatum& datum, int p);

enum class Fixedness { kFixed, kMoved, kUnknown };
const char* to_string(Fixedness f);

/// One simple module of the block: a W_I-orbit of alcoves around the special point.
struct LabelClass {
  std::string name;
  std::vector<WeylElt> members;  // labels u of the alcoves v + u(A_0)
  std::vector<Alcove> alcoves;
  Fixedness fixed_by_A = Fixedness::kUnknown;
  int component_orbit = -1;  // index of its A(e)-orbit, -1 when unknown
};

struct BlockModel {
  CartanType type;
  std::optional<std::vector<int>> levi;  // 1-based simple roots; absent when not of standard Levi form
  std::optional<SpecialPoint> special_point;
  std::vector<LabelClass> labels;
};

/// The |W| alcoves around v grouped into classes W_I u, ordered by their first member.
BlockModel simple_labels(const AffineWeylGroup& group, const std::vector<int>& levi, const SpecialPoint& v);

/// Records the A(e) action where it is known: every label fixed when A(e) is trivial.
void annotate_component_group(BlockModel& model, const OrbitRecord& record);

/// |labels| == euler. Throws std::invalid_argument when the record's Levi differs from the model's.
bool block_size_check(const BlockModel& model, const OrbitRecord& record);

/// The five labels of a regular block for the subregular orbit of G2, with the A(e) = S3
/// action read from data: two fixed labels and one orbit of three.
BlockModel g2_subregular_block();

}  // namespace affcells
