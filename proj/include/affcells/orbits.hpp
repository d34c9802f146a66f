#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcells/cells.hpp"
#include "affcells/hecke.hpp"
#include "affcells/rootdata.hpp"

namespace affcells {

/// One nilpotent orbit of a simple Lie algebra of the given type.
struct OrbitRecord {
  std::string label;
  int dim_orbit = 0;
  int dim_springer = 0;
  std::int64_t euler = 0;
  std::string component_group;
  /// Simple roots (1-based) of a Levi in which the orbit has a regular element.
  std::optional<std::vector<int>> standard_levi;
  std::optional<int> lc_count;
  std::string provenance;

  bool trivial_component_group() const { return component_group == "trivial"; }
  bool verified() const { return provenance.find("unverified") == std::string::npos; }
};

/// Parses the CSV layout label,dim_orbit,dim_springer,euler,component_group,standard_levi,lc_count,provenance.
/// standard_levi is "none", "empty" or space-separated indices; lc_count may be "unknown".
std::vector<OrbitRecord> parse_orbit_csv(std::string_view text);
std::string orbit_table_csv(const std::vector<OrbitRecord>& table);

/// Table for the type of `datum`; throws std::runtime_error when none ships.
std::vector<OrbitRecord> orbit_table(const RootDatum& datum);

/// Internal consistency problems of a table (empty when consistent).
std::vector<std::string> validate_orbit_table(const RootDatum& datum, const std::vector<OrbitRecord>& table);

/// The stored number of left cells; nullopt means unknown.
std::optional<int> lc_prediction(const OrbitRecord& record);

/// Whether the closure of a is contained in the closure of b: dominance order for
/// partition labels, dimension for the exceptional tables (which are chains here).
bool closure_leq(const OrbitRecord& a, const OrbitRecord& b);

struct BijectionMatch {
  std::map<int, std::string> cell_to_orbit;
  std::map<int, std::string> unmatched;  // cell -> reason
  std::vector<std::string> diagnostics;
  /// A cell above another is matched to an orbit whose closure contains the other's.
  bool order_compatible = true;
};

/// Matches complete two-sided cells with certified a-values to the orbit with dim B_e = a.
BijectionMatch match_cells_to_orbits(const CellPartition& partition, const AFunction& a, const Ball& ball,
                                     const std::vector<OrbitRecord>& table);

const OrbitRecord* find_orbit(const std::vector<OrbitRecord>& table, std::string_view label);

}  // namespace affcells
