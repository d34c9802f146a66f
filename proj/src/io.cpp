#include "affcells/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "affcells/data.hpp"

namespace affcells {

namespace {

Json vec_json(const IVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json vec_json(const RootVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json mask_json(std::uint32_t mask) {
  Json out = Json::array();
  for (int i = 0; i < 32; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

Json weyl_json(const RootDatum& d, WeylElt w) { return d.word(w); }

}  // namespace

WindowSpec configured_window(const CartanType& type, int radius) {
  const auto config = Json::parse(load_data_file("config/windows.json"));
  if (!config.contains(type.name())) throw std::runtime_error("no window configured for " + type.name());
  const auto& c = config.at(type.name());
  WindowSpec w{c.at("radius").get<int>(), c.at("check_margin").get<int>(), c.at("core_radius").get<int>()};
  if (radius > 0) {
    const int gap = w.radius - w.core_radius;
    w.radius = radius;
    w.core_radius = std::max(0, radius - gap);
  }
  return w;
}

Json to_json(const RootDatum& datum) {
  Json j;
  j["type"] = datum.type().name();
  j["rank"] = datum.rank();
  Json cartan = Json::array();
  for (int i = 0; i < datum.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < datum.rank(); ++k) row.push_back(datum.cartan()(i, k));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["simple_root_norms"] = vec_json(datum.simple_root_norms());
  Json roots = Json::array();
  for (const auto& r : datum.positive_roots()) roots.push_back(vec_json(r));
  j["positive_roots"] = roots;
  j["highest_short_root"] = vec_json(datum.positive_roots()[static_cast<std::size_t>(datum.highest_short_root())]);
  j["coxeter_number"] = datum.coxeter_number();
  j["weyl_order"] = datum.weyl_order();
  return j;
}

std::string ball_jsonl(const Ball& ball) {
  const auto& g = ball.group();
  std::string out;
  for (int i = 0; i < ball.size(); ++i) {
    const auto& e = ball[i];
    Json j;
    j["word"] = g.key(e);
    j["finite_part"] = weyl_json(g.datum(), e.finite);
    j["translation"] = vec_json(e.translation);
    j["length"] = e.length;
    j["left_descents"] = mask_json(ball.left_descents(i));
    j["right_descents"] = mask_json(ball.right_descents(i));
    j["alcove_coords"] = vec_json(g.alcove_of(e).coords);
    out += j.dump();
    out += '\n';
  }
  return out;
}

Json partition_json(const CellPartition& partition, const Ball& ball, const AFunction* a) {
  const auto& g = ball.group();
  Json j;
  j["type"] = g.datum().type().name();
  j["radius"] = partition.window.radius;
  j["check_margin"] = partition.window.check_margin;
  j["core_radius"] = partition.window.core_radius;
  j["convention"] = kConventionTag;
  Json elements = Json::object();
  for (int x = 0; x < ball.size(); ++x) {
    const auto lc = static_cast<std::size_t>(partition.left[static_cast<std::size_t>(x)]);
    Json e;
    e["left_cell"] = lc;
    e["right_cell"] = partition.right[static_cast<std::size_t>(x)];
    e["two_sided_cell"] = partition.two_sided[static_cast<std::size_t>(x)];
    e["complete"] = static_cast<bool>(partition.left_complete[lc]);
    elements[g.key(ball[x])] = e;
  }
  j["elements"] = elements;

  std::map<int, int> canonical;
  try {
    canonical = canonical_left_cells(partition, ball);
  } catch (const std::runtime_error& err) {
    j["canonical_error"] = err.what();
  }
  Json cells = Json::array();
  for (int c = 0; c < partition.num_two_sided; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    const auto members = partition.two_sided_members(c);
    Json t;
    t["id"] = c;
    t["size"] = members.size();
    t["core_size"] = partition.core_count(ball, members);
    t["complete"] = static_cast<bool>(partition.two_sided_complete[cc]);
    t["bounded"] = static_cast<bool>(partition.two_sided_bounded[cc]);
    t["representative"] = g.key(ball[members.front()]);
    if (a) {
      const AValue av = (*a)(members.front());
      t["a"] = av.value;
      t["a_certified"] = av.certified;
    }
    Json lefts = Json::array();
    for (int l : partition.left_cells_of(c)) {
      const auto lm = partition.left_members(l);
      Json lj;
      lj["id"] = l;
      lj["size"] = lm.size();
      lj["complete"] = static_cast<bool>(partition.left_complete[static_cast<std::size_t>(l)]);
      lj["bounded"] = static_cast<bool>(partition.left_bounded[static_cast<std::size_t>(l)]);
      lefts.push_back(lj);
    }
    t["left_cells"] = lefts;
    if (auto it = canonical.find(c); it != canonical.end()) t["canonical_left_cell"] = it->second;
    cells.push_back(t);
  }
  j["two_sided_cells"] = cells;
  Json order = Json::array();
  for (auto [hi, lo] : two_sided_order(partition)) order.push_back({hi, lo});
  j["order"] = order;
  return j;
}

Json to_json(const AffineWeylGroup& group, const BlockModel& block) {
  const auto& d = group.datum();
  Json j;
  j["type"] = block.type.name();
  j["levi"] = block.levi ? Json(*block.levi) : Json(nullptr);
  j["special_point"] = block.special_point ? vec_json(block.special_point->weight) : Json(nullptr);
  Json labels = Json::array();
  for (const auto& l : block.labels) {
    Json lj;
    lj["name"] = l.name;
    Json members = Json::array();
    for (auto w : l.members) members.push_back(weyl_json(d, w));
    lj["members"] = members;
    Json alcoves = Json::array();
    for (const auto& a : l.alcoves) alcoves.push_back(vec_json(a.coords));
    lj["alcoves"] = alcoves;
    lj["fixed_by_A"] = to_string(l.fixed_by_A);
    lj["component_orbit"] = l.component_orbit;
    labels.push_back(lj);
  }
  j["labels"] = labels;
  return j;
}

namespace {

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["result"] = to_string(c.verdict);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    out.push_back(cj);
  }
  return out;
}

}  // namespace

Json to_json(const Ball& ball, const AssignmentReport& report) {
  const auto& g = ball.group();
  Json j;
  j["orbit"] = report.orbit;
  j["omega"] = report.omega;
  j["canonical_left_cell"] = report.canonical;
  j["precondition_met"] = report.precondition_met;
  j["block"] = to_json(g, report.block);
  Json assignment = Json::array();
  for (std::size_t i = 0; i < report.block.labels.size(); ++i) {
    Json a;
    a["label"] = report.block.labels[i].name;
    a["left_cell"] = report.assignment[i] ? Json(*report.assignment[i]) : Json(nullptr);
    a["representative"] =
        report.representative[i] ? Json(g.key(ball[*report.representative[i]])) : Json(nullptr);
    assignment.push_back(a);
  }
  j["assignment"] = assignment;
  Json unresolved = Json::array();
  for (int u : report.unresolved) unresolved.push_back(report.block.labels[static_cast<std::size_t>(u)].name);
  j["unresolved"] = unresolved;
  j["checks"] = checks_json(report.checks);
  j["notes"] = report.notes;
  return j;
}

Json to_json(const Ball& ball, const AssignmentSearch& search) {
  Json j;
  j["trace"] = search.trace;
  j["independent_of_special_point"] = to_string(search.independent);
  Json reports = Json::array();
  for (const auto& r : search.reports) reports.push_back(to_json(ball, r));
  j["reports"] = reports;
  return j;
}

Json to_json(const AffineWeylGroup& group, const LowestReport& report) {
  const auto& d = group.datum();
  Json j;
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json pj;
    pj["v"] = vec_json(p.v.weight);
    pj["accepted"] = p.accepted;
    if (!p.reason.empty()) pj["reason"] = p.reason;
    Json bij = Json::array();
    for (int w = 0; w < static_cast<int>(p.chamber.size()); ++w) {
      Json e;
      e["label"] = weyl_json(d, WeylElt{w});
      e["chamber"] = weyl_json(d, p.chamber[static_cast<std::size_t>(w)]);
      bij.push_back(e);
    }
    pj["label_to_chamber"] = bij;
    points.push_back(pj);
  }
  j["points"] = points;
  j["distinct_chambers"] = report.distinct;
  j["independent_of_special_point"] = report.independent;
  j["passed"] = report.passed();
  return j;
}

Json to_json(const BijectionMatch& match) {
  Json j;
  Json m = Json::array();
  for (const auto& [c, l] : match.cell_to_orbit) m.push_back({{"two_sided_cell", c}, {"orbit", l}});
  j["cell_to_orbit"] = m;
  Json u = Json::array();
  for (const auto& [c, r] : match.unmatched) u.push_back({{"two_sided_cell", c}, {"reason", r}});
  j["unmatched"] = u;
  j["order_compatible"] = match.order_compatible;
  j["diagnostics"] = match.diagnostics;
  return j;
}

namespace {

constexpr const char* kPalette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
                                    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
                                    "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1"};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Vertices of A_0 in root coordinates, scaled by a common denominator to integers.
struct Embedding {
  std::int64_t denom = 1;
  std::vector<IVec> vertices;  // v_0 = 0, v_i = omega_i / c_i
  double ax[2]{}, ay[2]{};     // simple roots in the plane
};

Embedding make_embedding(const RootDatum& d) {
  Embedding e;
  const int theta = d.highest_short_root();
  std::vector<QVec> q;
  q.push_back(QVec::Zero(2));
  for (int i = 0; i < 2; ++i) {
    IVec unit = IVec::Zero(2);
    unit(i) = 1;
    const std::int64_t c = d.pair_weight(unit, theta);
    QVec r = d.weight_to_root_rational(unit);
    for (Eigen::Index k = 0; k < 2; ++k) r(k) /= Rational(c);
    q.push_back(r);
  }
  for (const auto& r : q)
    for (Eigen::Index k = 0; k < 2; ++k) e.denom = std::lcm(e.denom, r(k).den());
  for (const auto& r : q) {
    IVec v(2);
    for (Eigen::Index k = 0; k < 2; ++k) v(k) = r(k).num() * (e.denom / r(k).den());
    e.vertices.push_back(v);
  }
  // Gram matrix up to scale: (alpha_i, alpha_j) ~ A(i, j) * norm_i.
  const double g11 = static_cast<double>(d.cartan()(0, 0) * d.simple_root_norms()(0));
  const double g22 = static_cast<double>(d.cartan()(1, 1) * d.simple_root_norms()(1));
  const double g12 = static_cast<double>(d.cartan()(0, 1) * d.simple_root_norms()(0));
  e.ax[0] = std::sqrt(g11);
  e.ay[0] = 0.0;
  e.ax[1] = g12 / e.ax[0];
  e.ay[1] = std::sqrt(g22 - e.ax[1] * e.ax[1]);
  return e;
}

struct Point {
  long x, y;
};

// Plane coordinates in hundredths, y pointing up in E and down on the page.
Point to_plane(const Embedding& e, const IVec& scaled_root, double unit) {
  const double r0 = static_cast<double>(scaled_root(0)) / static_cast<double>(e.denom);
  const double r1 = static_cast<double>(scaled_root(1)) / static_cast<double>(e.denom);
  const double x = (r0 * e.ax[0] + r1 * e.ax[1]) * unit;
  const double y = (r0 * e.ay[0] + r1 * e.ay[1]) * unit;
  return {std::lround(x * 100.0), -std::lround(y * 100.0)};
}

std::string fmt(long hundredths) {
  const long a = hundredths < 0 ? -hundredths : hundredths;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%ld.%02ld", hundredths < 0 ? "-" : "", a / 100, a % 100);
  return buf;
}

}  // namespace

std::string render_svg(const CellPartition& partition, const Ball& ball, const AFunction* a) {
  const auto& g = ball.group();
  const auto& d = g.datum();
  if (d.rank() != 2) throw std::invalid_argument("SVG pictures need rank 2, got " + d.type().name());
  const Embedding emb = make_embedding(d);
  const double unit = 40.0;

  std::vector<std::array<Point, 3>> tri(static_cast<std::size_t>(ball.size()));
  long minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int x = 0; x < ball.size(); ++x) {
    const auto& e = ball[x];
    for (int k = 0; k < 3; ++k) {
      const IVec v = d.matrix(e.finite) * emb.vertices[static_cast<std::size_t>(k)] + emb.denom * e.translation;
      const Point p = to_plane(emb, v, unit);
      tri[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = p;
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const long pad = 2000;
  const long legend_rows = partition.num_two_sided;
  const long legend_h = (legend_rows + 1) * 1800;
  const long width = maxx - minx + 2 * pad;
  const long height = maxy - miny + 2 * pad + legend_h;

  auto pts = [&](const std::array<Point, 3>& t) {
    std::string s;
    for (int k = 0; k < 3; ++k) {
      if (k) s += ' ';
      s += fmt(t[static_cast<std::size_t>(k)].x) + "," + fmt(t[static_cast<std::size_t>(k)].y);
    }
    return s;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << ' ' << fmt(miny - pad) << ' '
      << fmt(width) << ' ' << fmt(height) << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\">\n";
  out << "<title>" << d.type().name() << " cells, radius " << ball.radius() << "</title>\n";
  out << "<g id=\"alcoves\" stroke=\"#555555\" stroke-width=\"0.4\">\n";
  for (int x = 0; x < ball.size(); ++x) {
    const auto xs = static_cast<std::size_t>(x);
    const int c = partition.two_sided[xs];
    const bool complete = partition.left_complete[static_cast<std::size_t>(partition.left[xs])];
    out << "<polygon class=\"alcove\" data-key=\"" << g.key(ball[x]) << "\" data-left=\"" << partition.left[xs]
        << "\" data-two-sided=\"" << c << "\" points=\"" << pts(tri[xs]) << "\" fill=\"" << kPalette[c % kPaletteSize]
        << "\" fill-opacity=\"" << (complete ? "1" : "0.35") << "\"/>\n";
  }
  out << "</g>\n";

  // Walls between alcoves in different left cells. The wall of s_i is the face opposite vertex i.
  out << "<g id=\"left-cell-walls\" stroke=\"#000000\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (int x = 0; x < ball.size(); ++x) {
    for (int s = 0; s < 3; ++s) {
      const int y = ball.rmul(x, s);
      if (y < 0 || y < x) continue;
      if (partition.left[static_cast<std::size_t>(x)] == partition.left[static_cast<std::size_t>(y)]) continue;
      std::array<Point, 2> face{};
      int n = 0;
      for (int k = 0; k < 3; ++k)
        if (k != s) face[static_cast<std::size_t>(n++)] = tri[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
      out << "<line x1=\"" << fmt(face[0].x) << "\" y1=\"" << fmt(face[0].y) << "\" x2=\"" << fmt(face[1].x)
          << "\" y2=\"" << fmt(face[1].y) << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<polygon id=\"fundamental-alcove\" points=\"" << pts(tri[0])
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\"/>\n";

  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  long y = maxy + pad;
  const long x0 = minx - pad + 1000;
  for (int c = 0; c < partition.num_two_sided; ++c) {
    const auto members = partition.two_sided_members(c);
    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y) << "\" width=\"12.00\" height=\"12.00\" fill=\""
        << kPalette[c % kPaletteSize] << "\"/>";
    out << "<text x=\"" << fmt(x0 + 1600) << "\" y=\"" << fmt(y + 1100) << "\">cell " << c << ": "
        << members.size() << " elements, " << partition.left_cells_of(c).size() << " left cells";
    if (a) {
      const AValue av = (*a)(members.front());
      out << ", a = " << av.value << (av.certified ? "" : " (uncertified)");
    }
    if (!partition.two_sided_complete[static_cast<std::size_t>(c)]) out << ", cut by the window";
    out << "</text>\n";
    y += 1800;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace affcells
