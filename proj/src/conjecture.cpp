#include "affcells/conjecture.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affcells {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotEvaluable: break;
  }
  return "not evaluable";
}

const Check* AssignmentReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Verdict verdict_of(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

std::string weight_string(const IVec& v) {
  std::ostringstream ss;
  ss << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v(i);
  ss << ')';
  return ss.str();
}

bool trivial_action(const BlockModel& block) {
  std::set<int> orbits;
  for (const auto& l : block.labels) {
    if (l.fixed_by_A != Fixedness::kFixed || l.component_orbit < 0) return false;
    orbits.insert(l.component_orbit);
  }
  return orbits.size() == block.labels.size();
}

void add_common_checks(AssignmentReport& r, const CellPartition& partition, const Ball& ball) {
  std::set<int> hit;
  for (const auto& a : r.assignment)
    if (a) hit.insert(*a);
  std::set<int> wanted;
  for (int c : partition.complete_left_cells_of(r.omega))
    if (partition.core_count(ball, partition.left_members(c)) > 0) wanted.insert(c);
  Check surj{"surjective", Verdict::kNotEvaluable, ""};
  if (r.unresolved.empty()) {
    surj.verdict = verdict_of(std::includes(hit.begin(), hit.end(), wanted.begin(), wanted.end()));
    surj.detail = std::to_string(hit.size()) + " of " + std::to_string(wanted.size()) + " left cells reached";
  }
  r.checks.push_back(surj);
  r.checks.push_back({"fibers", check_fibers(r), ""});
  r.checks.push_back({"canonical", check_canonical(r), ""});
}

}  // namespace

std::vector<int> canonical_labels(const BlockModel& block) {
  std::vector<int> out;
  if (trivial_action(block)) {
    const int w0 = RootDatum(block.type).longest().index;
    for (std::size_t i = 0; i < block.labels.size(); ++i)
      for (WeylElt u : block.labels[i].members)
        if (u.index == w0) out.push_back(static_cast<int>(i));
    return out;
  }
  for (std::size_t i = 0; i < block.labels.size(); ++i) {
    if (block.labels[i].fixed_by_A == Fixedness::kUnknown) return {};
    if (block.labels[i].fixed_by_A == Fixedness::kFixed) out.push_back(static_cast<int>(i));
  }
  return out;
}

AssignmentReport assign(const BlockModel& block, const CellPartition& partition, const Ball& ball, int omega) {
  AssignmentReport r;
  r.block = block;
  r.omega = omega;
  const auto n = block.labels.size();
  r.assignment.assign(n, std::nullopt);
  r.representative.assign(n, std::nullopt);
  try {
    r.canonical = canonical_left_cell(partition, ball, omega);
  } catch (const std::runtime_error& e) {
    r.precondition_met = false;
    r.notes.push_back(e.what());
    return r;
  }
  const auto& group = ball.group();
  bool agree = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<int> targets;
    for (const Alcove& alc : block.labels[i].alcoves) {
      const auto g = ball.find(group.element_of_alcove(alc));
      if (!g || partition.left[static_cast<std::size_t>(*g)] != r.canonical) continue;
      if (!r.representative[i]) r.representative[i] = *g;
      targets.insert(partition.left[static_cast<std::size_t>(ball.inverse(*g))]);
    }
    if (!r.representative[i]) {
      r.precondition_met = false;
      r.unresolved.push_back(static_cast<int>(i));
      r.notes.push_back(block.labels[i].name + ": no alcove of its class around v lies in the canonical left cell");
      continue;
    }
    if (targets.size() > 1) agree = false;
    const int target = partition.left[static_cast<std::size_t>(ball.inverse(*r.representative[i]))];
    if (partition.two_sided[static_cast<std::size_t>(ball.inverse(*r.representative[i]))] != omega ||
        !partition.left_complete[static_cast<std::size_t>(target)]) {
      r.unresolved.push_back(static_cast<int>(i));
      r.notes.push_back(block.labels[i].name + ": inverse alcove falls in an incomplete or foreign cell");
      continue;
    }
    r.assignment[i] = target;
  }
  r.checks.push_back({"representatives-agree", verdict_of(agree),
                      agree ? "" : "alcoves of one class in the canonical cell have inverses in different left cells"});
  add_common_checks(r, partition, ball);
  return r;
}

Verdict check_fibers(const AssignmentReport& report) {
  const auto& labels = report.block.labels;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].component_orbit < 0 || !report.assignment[i]) return Verdict::kNotEvaluable;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const bool same_orbit = labels[i].component_orbit == labels[j].component_orbit;
      const bool same_cell = *report.assignment[i] == *report.assignment[j];
      if (same_orbit != same_cell) return Verdict::kFail;
    }
  return Verdict::kPass;
}

Verdict check_canonical(const AssignmentReport& report) {
  const auto labels = canonical_labels(report.block);
  if (labels.empty() || report.canonical < 0) return Verdict::kNotEvaluable;
  for (int i : labels) {
    const auto& a = report.assignment[static_cast<std::size_t>(i)];
    if (!a) return Verdict::kNotEvaluable;
    if (*a != report.canonical) return Verdict::kFail;
  }
  return Verdict::kPass;
}

std::vector<SpecialPoint> dominant_root_lattice_points(const RootDatum& datum, int max_height) {
  const int r = datum.rank();
  std::vector<std::pair<int, IVec>> found;
  IVec t = IVec::Zero(r);
  // Odometer over 0 <= t_i <= max_height with sum(t) <= max_height.
  while (true) {
    if (t.sum() <= max_height) {
      const IVec w = datum.root_to_weight(t);
      if ((w.array() >= 0).all()) found.emplace_back(static_cast<int>(t.sum()), w);
    }
    int i = 0;
    while (i < r && t(i) == max_height) t(i++) = 0;
    if (i == r) break;
    ++t(i);
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::lexicographical_compare(a.second.data(), a.second.data() + a.second.size(), b.second.data(),
                                        b.second.data() + b.second.size());
  });
  std::vector<SpecialPoint> out;
  for (auto& [h, w] : found) out.push_back({w});
  return out;
}

AssignmentSearch assign_with_search(const AffineWeylGroup& group, const CellPartition& partition, const Ball& ball,
                                    const OrbitRecord& record, int omega, int wanted, int max_height) {
  AssignmentSearch s;
  if (!record.standard_levi) {
    s.trace.push_back(record.label + " has no standard Levi form");
    return s;
  }
  for (const auto& v : dominant_root_lattice_points(group.datum(), max_height)) {
    if (static_cast<int>(s.reports.size()) >= wanted) break;
    BlockModel block = simple_labels(group, *record.standard_levi, v);
    annotate_component_group(block, record);
    bool inside = true;
    for (const auto& l : block.labels)
      for (const auto& alc : l.alcoves) {
        const auto g = ball.find(group.element_of_alcove(alc));
        inside = inside && g && ball.length(*g) <= partition.window.core_radius;
      }
    const std::string at = "v = " + weight_string(v.weight);
    if (!inside) {
      s.trace.push_back(at + ": surrounding alcoves leave the window core");
      continue;
    }
    AssignmentReport r = assign(block, partition, ball, omega);
    r.orbit = record.label;
    if (!r.precondition_met) {
      s.trace.push_back(at + ": " + (r.notes.empty() ? std::string("precondition failed") : r.notes.front()));
      continue;
    }
    s.trace.push_back(at + ": accepted");
    s.reports.push_back(std::move(r));
  }
  if (s.reports.size() >= 2) {
    bool same = true;
    for (const auto& r : s.reports) same = same && r.assignment == s.reports.front().assignment;
    s.independent = verdict_of(same);
  }
  if (s.reports.empty()) s.trace.push_back("no suitable special point up to height " + std::to_string(max_height));
  return s;
}

LowestReport check_lowest(const AffineWeylGroup& group, const std::vector<SpecialPoint>& v_choices) {
  const auto& d = group.datum();
  LowestReport report;
  const auto weyl = enumerate_weyl(d);
  bool all_distinct = true;
  for (const auto& v : v_choices) {
    LowestPoint pt;
    pt.v = v;
    const auto t = d.weight_to_root(v.weight);
    if (!t) {
      pt.reason = "not in the root lattice";
    } else {
      for (int i = 0; i < d.rank() && pt.reason.empty(); ++i)
        if (v.weight(i) < 2)
          pt.reason = "an alcove around v crosses the hyperplane <x, alpha_" + std::to_string(i + 1) + "^vee> = 1";
    }
    if (pt.reason.empty()) {
      pt.accepted = true;
      pt.chamber.assign(weyl.size(), WeylElt{});
      std::set<int> chambers;
      for (WeylElt w : weyl) {
        const AffineElt xw = group.make(w, *t);
        const Alcove here = group.alcove_of(xw);
        if (!lowest_cell_member(here) || group.chamber_of(here) != d.identity()) {
          pt.accepted = false;
          pt.reason = "alcove labelled " + group.key(xw) + " is outside the canonical left cell";
          break;
        }
        const Alcove back = group.alcove_of(group.inverse(xw));
        if (!lowest_cell_member(back)) {
          pt.accepted = false;
          pt.reason = "inverse of " + group.key(xw) + " is outside the lowest cell";
          break;
        }
        const WeylElt c = group.chamber_of(back);
        pt.chamber[static_cast<std::size_t>(w.index)] = c;
        chambers.insert(c.index);
      }
      if (pt.accepted) all_distinct = all_distinct && static_cast<int>(chambers.size()) == d.weyl_size();
    }
    report.points.push_back(std::move(pt));
  }
  const std::vector<WeylElt>* reference = nullptr;
  int accepted = 0;
  bool independent = true;
  for (const auto& pt : report.points) {
    if (!pt.accepted) continue;
    ++accepted;
    if (!reference) reference = &pt.chamber;
    else independent = independent && pt.chamber == *reference;
  }
  report.distinct = accepted > 0 && all_distinct;
  report.independent = accepted > 0 && independent;
  return report;
}

std::vector<SpecialPoint> lowest_cell_points(const RootDatum& datum, int count) {
  std::vector<SpecialPoint> out;
  for (int h = 4 * datum.rank(); static_cast<int>(out.size()) < count; h *= 2) {
    out.clear();
    for (const auto& v : dominant_root_lattice_points(datum, h)) {
      if ((v.weight.array() >= 2).all()) out.push_back(v);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

AssignmentReport assign_g2_subregular(const CellPartition& partition, const Ball& ball) {
  const auto& group = ball.group();
  if (group.datum().type() != CartanType{'G', 2}) throw std::invalid_argument("the subregular block model is for G2");
  AssignmentReport r;
  r.block = g2_subregular_block();
  r.orbit = "G2(a1)";
  const auto n = r.block.labels.size();
  r.assignment.assign(n, std::nullopt);
  r.representative.assign(n, std::nullopt);

  const auto s0 = ball.find(group.generator(0));
  if (!s0) throw std::invalid_argument("window too small to contain s0");
  r.omega = partition.two_sided[static_cast<std::size_t>(*s0)];
  if (!partition.two_sided_bounded[static_cast<std::size_t>(r.omega)]) {
    r.precondition_met = false;
    r.notes.push_back("the two-sided cell of s0 is not seen whole in this window");
    return r;
  }
  r.canonical = canonical_left_cell(partition, ball, r.omega);
  const auto cells = partition.left_cells_of(r.omega);
  std::map<int, std::size_t> size;
  for (int c : cells) size[c] = partition.left_members(c).size();

  std::set<int> used;
  // L0 is attached to the alcove s_0(A_0); s_0 is its own inverse.
  const int l0_cell = partition.left[static_cast<std::size_t>(*s0)];
  std::map<int, std::vector<std::size_t>> orbit_labels;
  for (std::size_t i = 0; i < n; ++i) orbit_labels[r.block.labels[i].component_orbit].push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (r.block.labels[i].name == "L0") {
      r.assignment[i] = l0_cell;
      r.representative[i] = *s0;
      used.insert(l0_cell);
    }
  // The S3-orbit of three labels (isotropy of order 2) goes to the smallest left cell.
  auto smallest = std::min_element(size.begin(), size.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  const bool unique_smallest =
      std::count_if(size.begin(), size.end(), [&](const auto& e) { return e.second == smallest->second; }) == 1;
  if (!unique_smallest) r.notes.push_back("no unique smallest left cell for the orbit of three labels");
  for (const auto& [orbit, members] : orbit_labels) {
    if (members.size() < 2 || !unique_smallest) continue;
    for (auto i : members) r.assignment[i] = smallest->first;
    used.insert(smallest->first);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.assignment[i]) continue;
    for (int c : cells)
      if (!used.count(c)) {
        r.assignment[i] = c;
        used.insert(c);
        break;
      }
    if (!r.assignment[i]) r.unresolved.push_back(static_cast<int>(i));
  }
  r.checks.push_back({"L0-canonical", verdict_of(l0_cell == r.canonical),
                      "cell of s0 has " + std::to_string(size[l0_cell]) + " elements"});
  add_common_checks(r, partition, ball);
  return r;
}

bool subregular_l0_in_w0_class(const RootDatum& datum, const std::vector<int>& levi) {
  const WeylElt s_theta = datum.reflection(datum.highest_short_root());
  const WeylElt x = datum.multiply(s_theta, datum.longest());
  for (WeylElt y : datum.parabolic_subgroup(levi))
    if (y == x) return true;
  return false;
}

}  // namespace affcells
