#include "affcells/orbits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affcells/data.hpp"

namespace affcells {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<std::vector<int>> parse_partition(std::string_view label) {
  if (label.size() < 2 || label.front() != '[' || label.back() != ']') return std::nullopt;
  std::vector<int> parts;
  std::string body(label.substr(1, label.size() - 2));
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream ss(body);
  for (int p; ss >> p;) parts.push_back(p);
  return parts;
}

}  // namespace

std::vector<OrbitRecord> parse_orbit_csv(std::string_view text) {
  std::vector<OrbitRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  // Partition labels contain commas, so the label is everything before the last seven fields.
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() < 8) throw std::runtime_error("orbit table row has too few fields: " + line);
    const std::size_t extra = fields.size() - 8;
    std::string label = fields[0];
    for (std::size_t i = 1; i <= extra; ++i) label += "," + fields[i];
    auto f = [&](std::size_t i) -> const std::string& { return fields[extra + i]; };
    OrbitRecord r;
    r.label = label;
    r.dim_orbit = std::stoi(f(1));
    r.dim_springer = std::stoi(f(2));
    r.euler = std::stoll(f(3));
    r.component_group = f(4);
    if (f(5) == "empty") {
      r.standard_levi = std::vector<int>{};
    } else if (f(5) != "none") {
      std::vector<int> levi;
      std::istringstream ls(f(5));
      for (int i; ls >> i;) levi.push_back(i);
      r.standard_levi = levi;
    }
    if (f(6) != "unknown") r.lc_count = std::stoi(f(6));
    r.provenance = f(7);
    out.push_back(std::move(r));
  }
  return out;
}

std::string orbit_table_csv(const std::vector<OrbitRecord>& table) {
  std::ostringstream out;
  out << "label,dim_orbit,dim_springer,euler,component_group,standard_levi,lc_count,provenance\n";
  for (const auto& r : table) {
    out << r.label << ',' << r.dim_orbit << ',' << r.dim_springer << ',' << r.euler << ',' << r.component_group << ',';
    if (!r.standard_levi) {
      out << "none";
    } else if (r.standard_levi->empty()) {
      out << "empty";
    } else {
      for (std::size_t i = 0; i < r.standard_levi->size(); ++i) out << (i ? " " : "") << (*r.standard_levi)[i];
    }
    out << ',' << (r.lc_count ? std::to_string(*r.lc_count) : "unknown") << ',' << r.provenance << '\n';
  }
  return out.str();
}

std::vector<OrbitRecord> orbit_table(const RootDatum& datum) {
  const std::string name = datum.type().name();
  std::string text;
  try {
    text = load_data_file("orbits/" + name + ".csv");
  } catch (const std::runtime_error&) {
    throw std::runtime_error("no nilpotent orbit table for type " + name);
  }
  return parse_orbit_csv(text);
}

std::vector<std::string> validate_orbit_table(const RootDatum& datum, const std::vector<OrbitRecord>& table) {
  std::vector<std::string> problems;
  const int n = datum.num_positive_roots();
  bool has_zero = false, has_regular = false;
  for (const auto& r : table) {
    auto bad = [&](const std::string& what) { problems.push_back(r.label + ": " + what); };
    if (r.dim_orbit < 0 || r.dim_orbit > 2 * n || r.dim_orbit % 2 != 0) bad("orbit dimension out of range");
    if (r.dim_springer != n - r.dim_orbit / 2) bad("dim B_e differs from N - dim/2");
    if (r.dim_orbit == 0) {
      has_zero = true;
      if (r.euler != datum.weyl_order()) bad("zero orbit must have Euler characteristic |W|");
    }
    if (r.dim_orbit == 2 * n) {
      has_regular = true;
      if (r.euler != 1) bad("regular orbit must have Euler characteristic 1");
    }
    if (r.standard_levi) {
      const auto wi = static_cast<std::int64_t>(datum.parabolic_subgroup(*r.standard_levi).size());
      if (datum.weyl_order() % wi != 0 || r.euler != datum.weyl_order() / wi) bad("Euler characteristic differs from |W|/|W_I|");
    }
    if (r.trivial_component_group() && r.lc_count && *r.lc_count != r.euler) bad("trivial A(e) but lc_count != euler");
  }
  if (!has_zero) problems.push_back("missing zero orbit");
  if (!has_regular) problems.push_back("missing regular orbit");
  return problems;
}

std::optional<int> lc_prediction(const OrbitRecord& record) { return record.lc_count; }

bool closure_leq(const OrbitRecord& a, const OrbitRecord& b) {
  const auto pa = parse_partition(a.label), pb = parse_partition(b.label);
  if (pa && pb) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(pa->size(), pb->size()); ++i) {
      sa += i < pa->size() ? (*pa)[i] : 0;
      sb += i < pb->size() ? (*pb)[i] : 0;
      if (sa > sb) return false;
    }
    return true;
  }
  return a.dim_orbit <= b.dim_orbit;
}

const OrbitRecord* find_orbit(const std::vector<OrbitRecord>& table, std::string_view label) {
  for (const auto& r : table)
    if (r.label == label) return &r;
  return nullptr;
}

BijectionMatch match_cells_to_orbits(const CellPartition& partition, const AFunction& a, const Ball& ball,
                                     const std::vector<OrbitRecord>& table) {
  BijectionMatch m;
  for (int c = 0; c < partition.num_two_sided; ++c) {
    if (!partition.two_sided_complete[static_cast<std::size_t>(c)]) continue;
    const auto members = partition.two_sided_members(c);
    const AValue av = a(members.front());
    if (!av.certified) {
      m.unmatched[c] = "a-value " + std::to_string(av.value) + " not certified";
      continue;
    }
    std::vector<const OrbitRecord*> hits;
    for (const auto& r : table)
      if (r.dim_springer == av.value) hits.push_back(&r);
    if (hits.size() == 1) {
      m.cell_to_orbit[c] = hits.front()->label;
    } else {
      m.unmatched[c] = hits.empty() ? "no orbit with dim B_e = " + std::to_string(av.value)
                                    : std::to_string(hits.size()) + " orbits with dim B_e = " + std::to_string(av.value);
    }
  }
  std::map<std::string, int> used;
  for (const auto& [c, label] : m.cell_to_orbit) {
    if (auto [it, fresh] = used.emplace(label, c); !fresh) {
      m.diagnostics.push_back("cells " + std::to_string(it->second) + " and " + std::to_string(c) + " both match " + label);
      m.order_compatible = false;
    }
  }
  for (const auto& [c1, l1] : m.cell_to_orbit)
    for (const auto& [c2, l2] : m.cell_to_orbit) {
      if (c1 == c2 || !partition.geq[static_cast<std::size_t>(c1)][static_cast<std::size_t>(c2)]) continue;
      if (!closure_leq(*find_orbit(table, l2), *find_orbit(table, l1))) {
        m.order_compatible = false;
        m.diagnostics.push_back("cell " + std::to_string(c1) + " lies above cell " + std::to_string(c2) + " but " + l2 +
                                " is not in the closure of " + l1);
      }
    }
  const int identity_cell = partition.two_sided[0];
  if (auto it = m.cell_to_orbit.find(identity_cell); it != m.cell_to_orbit.end()) {
    if (find_orbit(table, it->second)->dim_orbit != 2 * ball.group().datum().num_positive_roots())
      m.diagnostics.push_back("the cell of the identity is not matched to the regular orbit");
  }
  return m;
}

}  // namespace affcells
