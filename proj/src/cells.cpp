#include "affcells/cells.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace affcells {

namespace {

using Graph = std::vector<std::vector<int>>;

// Tarjan's algorithm, iterative; components renumbered by their smallest vertex.
std::vector<int> strongly_connected(const Graph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, std::size_t>> frames;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < g[v].size()) {
        const int w = g[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
    }
  }
  std::vector<int> relabel(ncomp, -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v)
    if (relabel[comp[v]] < 0) relabel[comp[v]] = next_id++;
  for (auto& c : comp) c = relabel[c];
  return comp;
}

enum Side : unsigned { kLeft = 1, kRight = 2 };

// Edge y -> x means x <= y; `limit` restricts to the first `limit` elements.
Graph preorder_graph(const KLTable& t, int limit, unsigned sides) {
  const Ball& b = t.ball();
  Graph g(static_cast<std::size_t>(limit));
  auto not_within = [](std::uint32_t a, std::uint32_t c) { return (a & ~c) != 0; };
  for (int y = 0; y < limit; ++y) {
    for (const auto& [z, m] : t.mu_list(y)) {
      if (z >= limit) continue;
      const bool down = ((sides & kLeft) && not_within(b.right_descents(z), b.right_descents(y))) ||
                        ((sides & kRight) && not_within(b.left_descents(z), b.left_descents(y)));
      const bool up = ((sides & kLeft) && not_within(b.right_descents(y), b.right_descents(z))) ||
                      ((sides & kRight) && not_within(b.left_descents(y), b.left_descents(z)));
      if (down) g[static_cast<std::size_t>(y)].push_back(z);
      if (up) g[static_cast<std::size_t>(z)].push_back(y);
    }
  }
  return g;
}

int count_classes(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

struct Stability {
  std::vector<bool> complete, bounded;
};

Stability stability(const Ball& b, const std::vector<int>& full, const std::vector<int>& sub, int core_radius) {
  const int classes = count_classes(full);
  const int core_end = b.count_up_to(core_radius);
  const int sub_end = static_cast<int>(sub.size());
  std::vector<int> sub_of(static_cast<std::size_t>(classes), -1);
  std::vector<bool> ok(static_cast<std::size_t>(classes), true), meets(static_cast<std::size_t>(classes), false);
  std::vector<int> full_of_sub(static_cast<std::size_t>(count_classes(sub)), -1);
  for (int x = 0; x < core_end; ++x) {
    const auto c = static_cast<std::size_t>(full[static_cast<std::size_t>(x)]);
    const int d = sub[static_cast<std::size_t>(x)];
    meets[c] = true;
    if (sub_of[c] < 0) sub_of[c] = d;
    else if (sub_of[c] != d) ok[c] = false;
    auto& back = full_of_sub[static_cast<std::size_t>(d)];
    if (back < 0) back = static_cast<int>(c);
    else if (back != static_cast<int>(c)) ok[c] = ok[static_cast<std::size_t>(back)] = false;
  }
  Stability s;
  s.complete.assign(static_cast<std::size_t>(classes), false);
  s.bounded.assign(static_cast<std::size_t>(classes), false);
  for (int c = 0; c < classes; ++c) s.complete[static_cast<std::size_t>(c)] = meets[static_cast<std::size_t>(c)] && ok[static_cast<std::size_t>(c)];
  // Bounded: every member in the core, and the sub-window class has exactly the same members.
  std::vector<int> full_size(static_cast<std::size_t>(classes), 0), sub_size(full_of_sub.size(), 0);
  std::vector<bool> inside(static_cast<std::size_t>(classes), true);
  for (std::size_t x = 0; x < full.size(); ++x) {
    ++full_size[static_cast<std::size_t>(full[x])];
    if (static_cast<int>(x) >= core_end) inside[static_cast<std::size_t>(full[x])] = false;
  }
  for (int x = 0; x < sub_end; ++x) ++sub_size[static_cast<std::size_t>(sub[static_cast<std::size_t>(x)])];
  for (int c = 0; c < classes; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    s.bounded[cc] = s.complete[cc] && inside[cc] && sub_size[static_cast<std::size_t>(sub_of[cc])] == full_size[cc];
  }
  return s;
}

std::vector<int> members_of(const std::vector<int>& labels, int c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

std::vector<int> CellPartition::left_members(int c) const { return members_of(left, c); }
std::vector<int> CellPartition::two_sided_members(int c) const { return members_of(two_sided, c); }

std::vector<int> CellPartition::left_cells_of(int omega) const {
  std::set<int> ids;
  for (std::size_t i = 0; i < left.size(); ++i)
    if (two_sided[i] == omega) ids.insert(left[i]);
  return {ids.begin(), ids.end()};
}

std::vector<int> CellPartition::complete_left_cells_of(int omega) const {
  std::vector<int> out;
  for (int c : left_cells_of(omega))
    if (left_complete[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

int CellPartition::core_count(const Ball& ball, const std::vector<int>& members) const {
  return static_cast<int>(std::count_if(members.begin(), members.end(),
                                        [&](int x) { return ball.length(x) <= window.core_radius; }));
}

CellPartition cell_partition(const KLTable& table, const WindowSpec& window) {
  const Ball& b = table.ball();
  if (window.radius != b.radius()) throw std::invalid_argument("window radius differs from the ball radius");
  if (window.core_radius > window.radius - window.check_margin || window.check_margin < 0)
    throw std::invalid_argument("core radius must not exceed radius - check_margin");
  CellPartition p;
  p.window = window;
  const int n = b.size();
  const int sub_end = b.count_up_to(window.radius - window.check_margin);

  p.left = strongly_connected(preorder_graph(table, n, kLeft));
  p.right = strongly_connected(preorder_graph(table, n, kRight));
  const Graph both = preorder_graph(table, n, kLeft | kRight);
  p.two_sided = strongly_connected(both);
  p.num_left = count_classes(p.left);
  p.num_right = count_classes(p.right);
  p.num_two_sided = count_classes(p.two_sided);

  const auto left_sub = strongly_connected(preorder_graph(table, sub_end, kLeft));
  const auto two_sub = strongly_connected(preorder_graph(table, sub_end, kLeft | kRight));
  auto ls = stability(b, p.left, left_sub, window.core_radius);
  auto ts = stability(b, p.two_sided, two_sub, window.core_radius);
  p.left_complete = std::move(ls.complete);
  p.left_bounded = std::move(ls.bounded);
  p.two_sided_complete = std::move(ts.complete);
  p.two_sided_bounded = std::move(ts.bounded);

  // Reachability on the condensation.
  const auto k = static_cast<std::size_t>(p.num_two_sided);
  std::vector<std::set<int>> down(k);
  for (int y = 0; y < n; ++y)
    for (int x : both[static_cast<std::size_t>(y)]) {
      const int a = p.two_sided[static_cast<std::size_t>(y)], c = p.two_sided[static_cast<std::size_t>(x)];
      if (a != c) down[static_cast<std::size_t>(a)].insert(c);
    }
  p.geq.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<int> todo{static_cast<int>(a)};
    p.geq[a][a] = true;
    while (!todo.empty()) {
      const int c = todo.back();
      todo.pop_back();
      for (int d : down[static_cast<std::size_t>(c)])
        if (!p.geq[a][static_cast<std::size_t>(d)]) {
          p.geq[a][static_cast<std::size_t>(d)] = true;
          todo.push_back(d);
        }
    }
  }
  return p;
}

std::vector<std::pair<int, int>> two_sided_order(const CellPartition& partition) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < partition.num_two_sided; ++a)
    for (int b = 0; b < partition.num_two_sided; ++b)
      if (a != b && partition.geq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) out.emplace_back(a, b);
  return out;
}

namespace {

bool all_dominant(const CellPartition& p, const Ball& ball, int left_cell) {
  for (std::size_t x = 0; x < p.left.size(); ++x)
    if (p.left[x] == left_cell && (ball.left_descents(static_cast<int>(x)) & ~1U) != 0) return false;
  return true;
}

}  // namespace

int canonical_left_cell(const CellPartition& partition, const Ball& ball, int omega) {
  std::vector<int> found;
  for (int c : partition.left_cells_of(omega)) {
    const auto members = partition.left_members(c);
    if (partition.core_count(ball, members) == 0) continue;
    if (all_dominant(partition, ball, c)) found.push_back(c);
  }
  if (found.size() != 1)
    throw std::runtime_error("two-sided cell " + std::to_string(omega) + " has " + std::to_string(found.size()) +
                             " all-dominant left cells meeting the core");
  return found.front();
}

std::map<int, int> canonical_left_cells(const CellPartition& partition, const Ball& ball) {
  std::map<int, int> out;
  for (int omega = 0; omega < partition.num_two_sided; ++omega)
    if (partition.two_sided_complete[static_cast<std::size_t>(omega)])
      out[omega] = canonical_left_cell(partition, ball, omega);
  const int core_end = ball.count_up_to(partition.window.core_radius);
  for (int x = 0; x < core_end; ++x) {
    if ((ball.left_descents(x) & ~1U) != 0) continue;
    const int omega = partition.two_sided[static_cast<std::size_t>(x)];
    auto it = out.find(omega);
    if (it != out.end() && it->second != partition.left[static_cast<std::size_t>(x)])
      throw std::runtime_error("dominant element " + ball.group().key(ball[x]) +
                               " lies outside the canonical left cell of its two-sided cell");
  }
  return out;
}

bool lowest_cell_member(const Alcove& alcove) { return (alcove.coords.array() != 0).all(); }

std::vector<LowestLeftCell> lowest_cell_left_cells(const RootDatum& datum) {
  std::vector<LowestLeftCell> out;
  for (int w = 0; w < datum.weyl_size(); ++w) out.push_back({WeylElt{w}});
  return out;
}

AffineElt dominant_lowest_involution(const AffineWeylGroup& group) {
  const auto& d = group.datum();
  IVec two_rho = IVec::Zero(d.rank());
  for (const auto& a : d.positive_roots()) two_rho += a;
  return group.make(d.longest(), two_rho);
}

}  // namespace affcells
