#include "affcells/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace affcells {

KLTable::KLTable(const Ball& ball, const BruhatOrder& order)
    : ball_(&ball), order_(&order), n_(ball.size()) {
  ids_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  intern(LaurentPoly::zero());
  intern(LaurentPoly::one());
  mu_lists_.resize(static_cast<std::size_t>(n_));

  LaurentPoly acc;
  for (int y = 0; y < n_; ++y) {
    ids_[idx(y, y)] = 1;
    if (y == 0) continue;
    int s = 0;
    while (!((ball.right_descents(y) >> s) & 1U)) ++s;
    const int v = ball.rmul(y, s);
    const int ly = ball.length(y);
    const auto lower = order.below(y);
    // Decreasing index, so xs (longer than x) is done before x.
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
      const int x = *it;
      if (x == y) continue;
      const int xs = ball.rmul(x, s);
      if (!((ball.right_descents(x) >> s) & 1U)) {
        ids_[idx(x, y)] = ids_[idx(xs, y)];
        continue;
      }
      acc = P(xs, v);
      acc.add_scaled(P(x, v), 1, 1);
      for (const auto& [z, m] : mu_lists_[static_cast<std::size_t>(v)]) {
        if (!((ball.right_descents(z) >> s) & 1U) || !order.leq(x, z)) continue;
        acc.add_scaled(P(x, z), -m, (ly - ball.length(z)) / 2);
      }
      const int gap = ly - ball.length(x);
      if (acc.is_zero() || acc.valuation() != 0 || acc.coeff(0) != 1 || 2 * acc.degree() > gap - 1 ||
          !acc.nonnegative()) {
        throw KLInvariantError("P_{x,y} = " + acc.to_string() + " violates the KL invariants for x = " +
                               ball.group().key(ball[x]) + ", y = " + ball.group().key(ball[y]));
      }
      ids_[idx(x, y)] = intern(acc);
    }
    auto& mus = mu_lists_[static_cast<std::size_t>(y)];
    for (int x : lower) {
      if (x == y) continue;
      const int m = mu(x, y);
      if (m != 0) mus.emplace_back(x, m);
    }
  }
}

std::uint32_t KLTable::intern(const LaurentPoly& p) {
  auto [it, inserted] = pool_index_.emplace(p.coefficients(), static_cast<std::uint32_t>(pool_.size()));
  if (inserted) pool_.push_back(p);
  return it->second;
}

int KLTable::mu(int x, int y) const {
  if (x == y) return 0;
  const int gap = ball_->length(y) - ball_->length(x);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return static_cast<int>(P(x, y).coeff((gap - 1) / 2));
}

void KLTable::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto& g = ball_->group();
  out << "# " << g.datum().type().name() << " radius " << ball_->radius() << " " << kConventionTag << "\n";
  out << "x,y,coefficients\n";
  for (int y = 0; y < n_; ++y) {
    const std::string yk = g.key(ball()[y]);
    for (int x : order_->below(y)) {
      out << g.key(ball()[x]) << ',' << yk << ',';
      const auto& c = P(x, y).coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
      out << '\n';
    }
  }
}

bool KLTable::matches_csv(const std::filesystem::path& path) const {
  std::ifstream in(path);
  if (!in) return false;
  const auto& g = ball_->group();
  std::string line;
  std::size_t rows = 0;
  std::size_t expected = 0;
  for (int y = 0; y < n_; ++y) expected += order_->below(y).size();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
    std::istringstream ls(line);
    std::string xk, yk, coeffs;
    if (!std::getline(ls, xk, ',') || !std::getline(ls, yk, ',') || !std::getline(ls, coeffs)) return false;
    const auto x = ball_->find(g.parse_key(xk));
    const auto y = ball_->find(g.parse_key(yk));
    if (!x || !y) return false;
    std::vector<std::int64_t> c;
    std::istringstream cs(coeffs);
    for (std::int64_t v; cs >> v;) c.push_back(v);
    if (LaurentPoly(0, c) != P(*x, *y)) return false;
    ++rows;
  }
  return rows == expected;
}

std::string kl_cache_name(const std::string& type, int radius) {
  std::string tag = kConventionTag;
  std::replace(tag.begin(), tag.end(), '/', '-');
  return "kl_" + type + "_" + tag + "_r" + std::to_string(radius) + ".csv";
}

namespace {

const LaurentPoly& v_plus_inverse() {
  static const LaurentPoly p(-1, {1, 0, 1});
  return p;
}

// acc += coeff * C'_s C'_w.
void add_left_generator(const KLTable& t, int s, int w, const LaurentPoly& coeff, HeckeElt& acc) {
  const Ball& b = t.ball();
  auto add = [&](int z, const LaurentPoly& c) {
    auto& slot = acc[z];
    slot += c;
    if (slot.is_zero()) acc.erase(z);
  };
  if ((b.left_descents(w) >> s) & 1U) {
    add(w, coeff * v_plus_inverse());
    return;
  }
  const int sw = b.lmul(w, s);
  if (sw < 0) throw std::out_of_range("product leaves the ball");
  add(sw, coeff);
  for (const auto& [z, m] : t.mu_list(w))
    if ((b.left_descents(z) >> s) & 1U) add(z, coeff * m);
}

int lowest_bit(std::uint32_t mask) { return __builtin_ctz(mask); }

}  // namespace

std::vector<HeckeElt> left_products(const KLTable& table, int y, int max_len) {
  const Ball& b = table.ball();
  const int limit = b.count_up_to(std::min(max_len, b.radius()));
  std::vector<HeckeElt> prod(static_cast<std::size_t>(limit));
  prod[0][y] = LaurentPoly::one();
  for (int x = 1; x < limit; ++x) {
    if (b.length(x) + b.length(y) > b.radius()) break;
    const int s = lowest_bit(b.left_descents(x));
    const int xp = b.lmul(x, s);
    HeckeElt acc;
    for (const auto& [w, c] : prod[static_cast<std::size_t>(xp)]) add_left_generator(table, s, w, c, acc);
    // C'_s C'_{x'} = C'_x + sum over z < x' with sz < z of mu(z, x') C'_z.
    for (const auto& [z, m] : table.mu_list(xp)) {
      if (!((b.left_descents(z) >> s) & 1U)) continue;
      for (const auto& [w, c] : prod[static_cast<std::size_t>(z)]) {
        auto& slot = acc[w];
        slot.add_scaled(c, -m, 0);
        if (slot.is_zero()) acc.erase(w);
      }
    }
    prod[static_cast<std::size_t>(x)] = std::move(acc);
  }
  return prod;
}

ProductResult kl_product(const KLTable& table, int x, int y) {
  const Ball& b = table.ball();
  ProductResult r;
  if (b.length(x) + b.length(y) > b.radius()) {
    r.partial = true;
    return r;
  }
  auto prods = left_products(table, y, b.length(x));
  r.terms = std::move(prods[static_cast<std::size_t>(x)]);
  return r;
}

std::vector<int> raw_a_values(const KLTable& table, int k) {
  const Ball& b = table.ball();
  std::vector<int> a(static_cast<std::size_t>(b.size()), -1);
  const int top = b.count_up_to(std::min(k, b.radius()));
  for (int y = 0; y < top; ++y) {
    const auto prods = left_products(table, y, k);
    for (const auto& h : prods)
      for (const auto& [z, c] : h) a[static_cast<std::size_t>(z)] = std::max(a[static_cast<std::size_t>(z)], c.degree());
  }
  return a;
}

AFunction::AFunction(const KLTable& table, const std::vector<int>& two_sided, const std::vector<int>& levels)
    : levels_(levels) {
  const int n = table.size();
  const int classes = two_sided.empty() ? 0 : *std::max_element(two_sided.begin(), two_sided.end()) + 1;
  const int ceiling = table.ball().group().datum().num_positive_roots();
  for (int k : levels_) {
    const auto raw = raw_a_values(table, k);
    std::vector<int> best(static_cast<std::size_t>(classes), -1);
    for (int z = 0; z < n; ++z) {
      auto& slot = best[static_cast<std::size_t>(two_sided[static_cast<std::size_t>(z)])];
      slot = std::max(slot, raw[static_cast<std::size_t>(z)]);
    }
    history_.push_back(std::move(best));
  }
  std::vector<AValue> per_class(static_cast<std::size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    const int last = history_.empty() ? -1 : history_.back()[static_cast<std::size_t>(c)];
    bool stable = !history_.empty() && last >= 0;
    for (const auto& h : history_) stable = stable && h[static_cast<std::size_t>(c)] == last;
    per_class[static_cast<std::size_t>(c)] = {std::max(last, 0), last == ceiling || stable};
  }
  values_.resize(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) values_[static_cast<std::size_t>(z)] = per_class[static_cast<std::size_t>(two_sided[static_cast<std::size_t>(z)])];
}

Distinguished is_distinguished(const KLTable& table, const AFunction& a, int w) {
  const AValue av = a(w);
  const bool flag = av.value == table.ball().length(w) - 2 * table.delta(w);
  Distinguished d{flag, av.certified};
  if (flag && av.certified && table.ball().inverse(w) != w)
    throw std::logic_error("certified distinguished element is not an involution: " +
                           table.ball().group().key(table.ball()[w]));
  return d;
}

}  // namespace affcells
