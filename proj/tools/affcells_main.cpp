// Command-line front end for the affcells library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "affcells/conjecture.hpp"
#include "affcells/io.hpp"

namespace fs = std::filesystem;
using namespace affcells;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type = "A2";
  int radius = 0;  // 0: from config/windows.json
  int core = -1;   // -1: from config
  std::size_t cap = kDefaultBallCap;
  std::string out;
};

// Everything built on one window, in dependency order.
struct Session {
  std::unique_ptr<AffineWeylGroup> group;
  std::unique_ptr<Ball> ball;
  std::unique_ptr<BruhatOrder> order;
  std::unique_ptr<KLTable> kl;
  WindowSpec window;
};

CartanType parse_type(const std::string& text) {
  try {
    return CartanType::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Writes the table to $AFFCELLS_CACHE on first use; later runs must reproduce it.
void sync_cache(const KLTable& kl, const std::string& type, int radius) {
  const char* dir = std::getenv("AFFCELLS_CACHE");
  if (!dir || !*dir) return;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / kl_cache_name(type, radius);
  if (fs::exists(path)) {
    if (!kl.matches_csv(path))
      throw std::runtime_error("KL cache " + path.string() + " disagrees with the recomputed table; remove it");
    return;
  }
  kl.save_csv(path);
}

Session open_session(const RunConfig& cfg, bool need_kl = true) {
  const CartanType type = parse_type(cfg.type);
  Session s;
  s.window = configured_window(type, cfg.radius);
  if (cfg.core >= 0) s.window.core_radius = cfg.core;
  if (s.window.core_radius > s.window.radius - s.window.check_margin)
    throw UsageError("core radius must be at most radius - " + std::to_string(s.window.check_margin));
  s.group = std::make_unique<AffineWeylGroup>(RootDatum(type));
  s.ball = std::make_unique<Ball>(*s.group, s.window.radius, cfg.cap);
  if (need_kl) {
    s.order = std::make_unique<BruhatOrder>(*s.ball);
    s.kl = std::make_unique<KLTable>(*s.ball, *s.order);
    sync_cache(*s.kl, type.name(), s.window.radius);
  }
  return s;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

std::vector<int> a_levels(const RootDatum& d) {
  const int n = d.num_positive_roots();
  return {n, n + 1, n + 2};
}

void add_window_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--type", cfg.type, "Cartan type, e.g. A2, B2, G2")->required();
  cmd->add_option("--radius", cfg.radius, "ball radius (default from config)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--core", cfg.core, "trusted core radius (default from config)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cap", cfg.cap, "abort when the ball would exceed this many elements");
  cmd->add_option("-o,--out", cfg.out, "output file (default stdout)");
}

IVec parse_weight(const std::string& text, int rank) {
  IVec v = IVec::Zero(rank);
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= rank) throw UsageError("too many coordinates in '" + text + "'");
    try {
      v(i++) = std::stoll(part);
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + part + "'");
    }
  }
  if (i != rank) throw UsageError("expected " + std::to_string(rank) + " coordinates in '" + text + "'");
  return v;
}

const OrbitRecord& require_orbit(const std::vector<OrbitRecord>& table, const std::string& label) {
  const OrbitRecord* r = find_orbit(table, label);
  if (!r) throw UsageError("no orbit '" + label + "' in the table");
  return *r;
}

int run_kl_poly(const RunConfig& cfg, const std::string& xk, const std::string& yk) {
  const CartanType type = parse_type(cfg.type);
  AffineWeylGroup g{RootDatum(type)};
  AffineElt x, y;
  try {
    x = g.parse_key(xk);
    y = g.parse_key(yk);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int radius = std::max({cfg.radius, x.length, y.length});
  Ball ball(g, radius, cfg.cap);
  BruhatOrder order(ball);
  KLTable kl(ball, order);
  const int xi = ball.index_of(x), yi = ball.index_of(y);
  Json j;
  j["x"] = g.key(x);
  j["y"] = g.key(y);
  j["bruhat_leq"] = order.leq(xi, yi);
  j["P"] = kl.P(xi, yi).to_string();
  j["mu"] = kl.mu_sym(xi, yi);
  emit(cfg, j);
  return 0;
}

int run_cells_compute(const RunConfig& cfg) {
  Session s = open_session(cfg);
  const auto p = cell_partition(*s.kl, s.window);
  AFunction a(*s.kl, p.two_sided, a_levels(s.group->datum()));
  emit(cfg, partition_json(p, *s.ball, &a));
  return 0;
}

int run_cells_svg(const RunConfig& cfg) {
  if (parse_type(cfg.type).rank != 2) throw UsageError("cells svg needs a rank 2 type");
  Session s = open_session(cfg);
  const auto p = cell_partition(*s.kl, s.window);
  AFunction a(*s.kl, p.two_sided, a_levels(s.group->datum()));
  emit(cfg, render_svg(p, *s.ball, &a));
  return 0;
}

int run_orbits_table(const RunConfig& cfg, bool match) {
  const RootDatum d(parse_type(cfg.type));
  const auto table = orbit_table(d);
  const auto problems = validate_orbit_table(d, table);
  for (const auto& pr : problems) std::cerr << "table: " << pr << "\n";
  if (!match) {
    emit(cfg, orbit_table_csv(table));
    return problems.empty() ? 0 : 1;
  }
  Session s = open_session(cfg);
  const auto p = cell_partition(*s.kl, s.window);
  AFunction a(*s.kl, p.two_sided, a_levels(d));
  Json j = to_json(match_cells_to_orbits(p, a, *s.ball, table));
  j["table_problems"] = problems;
  emit(cfg, j);
  return problems.empty() ? 0 : 1;
}

int run_blocks_labels(const RunConfig& cfg, const std::string& orbit, const std::string& levi_text,
                      const std::string& v_text) {
  const CartanType type = parse_type(cfg.type);
  AffineWeylGroup g{RootDatum(type)};
  const auto& d = g.datum();
  std::vector<int> levi;
  const OrbitRecord* record = nullptr;
  const auto table = orbit_table(d);
  if (!orbit.empty()) {
    record = &require_orbit(table, orbit);
    if (!record->standard_levi) throw UsageError("orbit '" + orbit + "' is not of standard Levi form");
    levi = *record->standard_levi;
  } else {
    std::stringstream ss(levi_text);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.empty()) continue;
      const int i = std::atoi(part.c_str());
      if (i < 1 || i > d.rank()) throw UsageError("bad simple root index '" + part + "'");
      levi.push_back(i);
    }
  }
  SpecialPoint v = SpecialPoint::origin(d);
  if (!v_text.empty()) v.weight = parse_weight(v_text, d.rank());
  BlockModel block = simple_labels(g, levi, v);
  Json j = to_json(g, block);
  if (record) {
    annotate_component_group(block, *record);
    j = to_json(g, block);
    j["orbit"] = record->label;
    j["euler"] = record->euler;
    j["size_check"] = block_size_check(block, *record);
  }
  j["weyl_over_levi"] = d.weyl_order() / static_cast<std::int64_t>(d.parabolic_subgroup(levi).size());
  emit(cfg, j);
  return 0;
}

int run_assign(const RunConfig& cfg, const std::string& orbit, int wanted, int max_height) {
  Session s = open_session(cfg);
  const auto& d = s.group->datum();
  const auto p = cell_partition(*s.kl, s.window);
  AFunction a(*s.kl, p.two_sided, a_levels(d));
  const auto table = orbit_table(d);
  const OrbitRecord& record = require_orbit(table, orbit);
  const auto match = match_cells_to_orbits(p, a, *s.ball, table);
  int omega = -1;
  for (const auto& [c, l] : match.cell_to_orbit)
    if (l == record.label) omega = c;
  if (omega < 0) throw std::runtime_error("no complete two-sided cell in the window matches orbit " + record.label);
  if (!record.standard_levi) throw UsageError("orbit '" + orbit + "' is not of standard Levi form");
  if (max_height <= 0) max_height = 2 * s.window.core_radius;
  const auto search = assign_with_search(*s.group, p, *s.ball, record, omega, wanted, max_height);
  Json j = to_json(*s.ball, search);
  j["orbit"] = record.label;
  j["omega"] = omega;
  emit(cfg, j);
  return search.reports.empty() ? 1 : 0;
}

int run_check_lowest(const RunConfig& cfg, int count) {
  const CartanType type = parse_type(cfg.type);
  AffineWeylGroup g{RootDatum(type)};
  const auto report = check_lowest(g, lowest_cell_points(g.datum(), count));
  emit(cfg, to_json(g, report));
  return report.passed() ? 0 : 1;
}

int run_check_g2(RunConfig cfg) {
  cfg.type = "G2";
  Session s = open_session(cfg);
  const auto p = cell_partition(*s.kl, s.window);
  const auto report = assign_g2_subregular(p, *s.ball);
  Json j = to_json(*s.ball, report);
  Json sizes = Json::array();
  std::map<int, int> fiber;
  for (int c : p.left_cells_of(report.omega)) {
    sizes.push_back(p.left_members(c).size());
    fiber[c] = 0;
  }
  for (const auto& a : report.assignment)
    if (a) ++fiber[*a];
  std::vector<int> pattern;
  for (auto [c, n] : fiber) pattern.push_back(n);
  std::sort(pattern.begin(), pattern.end());
  j["left_cell_sizes"] = sizes;
  j["fiber_pattern"] = pattern;
  j["two_sided_bounded"] = static_cast<bool>(p.two_sided_bounded[static_cast<std::size_t>(report.omega)]);
  emit(cfg, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cells of affine Weyl groups and nilpotent orbit data"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* group = app.add_subcommand("group", "affine Weyl group data")->require_subcommand(1);
  auto* ball = group->add_subcommand("ball", "dump the elements of a ball as JSON lines");
  add_window_options(ball, cfg);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials")->require_subcommand(1);
  auto* poly = kl->add_subcommand("poly", "print P_{x,y}");
  std::string xk, yk;
  poly->add_option("--type", cfg.type, "Cartan type")->required();
  poly->add_option("--x", xk, "element key, e.g. e or s0s1")->required();
  poly->add_option("--y", yk, "element key")->required();
  poly->add_option("--radius", cfg.radius, "ball radius (default: length of x and y)");
  poly->add_option("-o,--out", cfg.out, "output file");

  auto* cells = app.add_subcommand("cells", "cell partitions")->require_subcommand(1);
  auto* compute = cells->add_subcommand("compute", "left, right and two-sided cells as JSON");
  add_window_options(compute, cfg);
  auto* svg = cells->add_subcommand("svg", "picture of the cells of a rank 2 window");
  add_window_options(svg, cfg);

  auto* orbits = app.add_subcommand("orbits", "nilpotent orbit tables")->require_subcommand(1);
  auto* otable = orbits->add_subcommand("table", "print the orbit table as CSV");
  bool match = false;
  add_window_options(otable, cfg);
  otable->add_flag("--match", match, "match two-sided cells to orbits instead (JSON)");

  auto* blocks = app.add_subcommand("blocks", "simple modules of standard Levi blocks")->require_subcommand(1);
  auto* labels = blocks->add_subcommand("labels", "labels as classes of alcoves around a special point");
  std::string orbit, levi_text, v_text;
  labels->add_option("--type", cfg.type, "Cartan type")->required();
  auto* by_orbit = labels->add_option("--orbit", orbit, "orbit label from the table");
  labels->add_option("--levi", levi_text, "simple roots of the Levi, comma separated (1-based)")->excludes(by_orbit);
  labels->add_option("--v", v_text, "special point in fundamental-weight coordinates, e.g. 1,1");
  labels->add_option("-o,--out", cfg.out, "output file");

  auto* conj = app.add_subcommand("conjecture", "label to left cell assignments")->require_subcommand(1);
  auto* assign_cmd = conj->add_subcommand("assign", "assign the labels of an orbit's block to left cells");
  int wanted = 3, max_height = 0;
  add_window_options(assign_cmd, cfg);
  assign_cmd->add_option("--orbit", orbit, "orbit label")->required();
  assign_cmd->add_option("--points", wanted, "number of special points to use")->check(CLI::PositiveNumber);
  assign_cmd->add_option("--max-height", max_height, "search bound for special points (default 2 * core)");
  auto* lowest = conj->add_subcommand("check-lowest", "bijection between W and the lowest left cells");
  int count = 3;
  lowest->add_option("--type", cfg.type, "Cartan type")->required();
  lowest->add_option("--points", count, "number of special points")->check(CLI::PositiveNumber);
  lowest->add_option("-o,--out", cfg.out, "output file");
  auto* g2 = conj->add_subcommand("check-g2", "the subregular block of G2");
  g2->add_option("--radius", cfg.radius, "ball radius (default from config)");
  g2->add_option("--core", cfg.core, "trusted core radius");
  g2->add_option("-o,--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ball->parsed()) {
      Session s = open_session(cfg, false);
      emit(cfg, ball_jsonl(*s.ball));
      return 0;
    }
    if (poly->parsed()) return run_kl_poly(cfg, xk, yk);
    if (compute->parsed()) return run_cells_compute(cfg);
    if (svg->parsed()) return run_cells_svg(cfg);
    if (otable->parsed()) return run_orbits_table(cfg, match);
    if (labels->parsed()) return run_blocks_labels(cfg, orbit, levi_text, v_text);
    if (assign_cmd->parsed()) return run_assign(cfg, orbit, wanted, max_height);
    if (lowest->parsed()) return run_check_lowest(cfg, count);
    if (g2->parsed()) return run_check_g2(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
