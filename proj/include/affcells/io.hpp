#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "affcells/cells.hpp"
#include "affcells/conjecture.hpp"
#include "affcells/hecke.hpp"
#include "affcells/orbits.hpp"
#include "affcells/repmodel.hpp"

namespace affcells {

using Json = nlohmann::ordered_json;

Json to_json(const RootDatum& datum);

/// Window for a type from config/windows.json. With radius > 0 the configured gap
/// between radius and core is kept; throws std::runtime_error for an unlisted type.
WindowSpec configured_window(const CartanType& type, int radius = 0);

/// One JSON object per line: word, finite_part, translation, length, descents, alcove.
std::string ball_jsonl(const Ball& ball);

/// Cells keyed by element key, plus per-class data and the strict two-sided order.
/// a-values are included when `a` is given.
Json partition_json(const CellPartition& partition, const Ball& ball, const AFunction* a = nullptr);

Json to_json(const AffineWeylGroup& group, const BlockModel& block);
Json to_json(const Ball& ball, const AssignmentReport& report);
Json to_json(const Ball& ball, const AssignmentSearch& search);
Json to_json(const AffineWeylGroup& group, const LowestReport& report);
Json to_json(const BijectionMatch& match);

/// Picture of a rank 2 window: one triangle per element, filled by two-sided cell,
/// with thick edges between different left cells and the fundamental alcove outlined.
/// Throws std::invalid_argument when the rank is not 2.
std::string render_svg(const CellPartition& partition, const Ball& ball, const AFunction* a = nullptr);

}  // namespace affcells
