#include "affcells/affine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace affcells {

SpecialPoint SpecialPoint::from_root_coords(const RootDatum& datum, const QVec& point) {
  IVec weight(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) {
    Rational p(0);
    for (int j = 0; j < datum.rank(); ++j) p += Rational(datum.cartan()(i, j)) * point(j);
    if (!p.is_integer())
      throw std::invalid_argument("not a special point: pairing with simple coroot " + std::to_string(i + 1) +
                                  " is " + p.str());
    weight(i) = p.num();
  }
  return {weight};
}

AffineWeylGroup::AffineWeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const int theta = datum_.highest_short_root();
  generators_.push_back(make(datum_.reflection(theta), datum_.positive_roots()[static_cast<std::size_t>(theta)]));
  for (int i = 0; i < rank(); ++i) generators_.push_back(make(datum_.simple_reflection(i), IVec::Zero(rank())));
}

AffineElt AffineWeylGroup::identity() const { return make(datum_.identity(), IVec::Zero(rank())); }

AffineElt AffineWeylGroup::make(WeylElt w, const IVec& translation) const {
  return {w, translation, length(w, translation)};
}

AffineElt AffineWeylGroup::from_word(const std::vector<int>& word) const {
  AffineElt out = identity();
  for (int s : word) {
    if (s < 0 || s >= num_generators()) throw std::invalid_argument("generator index out of range");
    out = multiply(out, generators_[static_cast<std::size_t>(s)]);
  }
  return out;
}

AffineElt AffineWeylGroup::multiply(const AffineElt& a, const AffineElt& b) const {
  if (a.translation.size() != b.translation.size() || a.translation.size() != rank())
    throw std::invalid_argument("multiply: elements from different root data");
  return make(datum_.multiply(a.finite, b.finite), a.translation + datum_.matrix(a.finite) * b.translation);
}

AffineElt AffineWeylGroup::inverse(const AffineElt& a) const {
  const WeylElt winv = datum_.inverse(a.finite);
  return {winv, -(datum_.matrix(winv) * a.translation), a.length};
}

int AffineWeylGroup::length(WeylElt w, const IVec& translation) const {
  const std::uint64_t neg = datum_.inverse_inversions(w);
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> pairings = datum_.coroot_pairing() * translation;
  std::int64_t total = 0;
  for (Eigen::Index a = 0; a < pairings.size(); ++a) total += std::abs(pairings(a) - static_cast<std::int64_t>((neg >> a) & 1U));
  return static_cast<int>(total);
}

Descents AffineWeylGroup::descents(const AffineElt& a) const {
  Descents d;
  for (int s = 0; s < num_generators(); ++s) {
    if (multiply(a, generators_[static_cast<std::size_t>(s)]).length < a.length) d.right |= 1U << s;
    if (multiply(generators_[static_cast<std::size_t>(s)], a).length < a.length) d.left |= 1U << s;
  }
  return d;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineElt& a) const {
  std::vector<int> word;
  AffineElt cur = a;
  while (cur.length > 0) {
    for (int s = 0; s < num_generators(); ++s) {
      AffineElt next = multiply(generators_[static_cast<std::size_t>(s)], cur);
      if (next.length < cur.length) {
        word.push_back(s);
        cur = std::move(next);
        break;
      }
    }
  }
  return word;
}

std::string AffineWeylGroup::key(const AffineElt& a) const {
  if (a.length == 0) return "e";
  std::string out;
  for (int s : reduced_word(a)) out += "s" + std::to_string(s);
  return out;
}

AffineElt AffineWeylGroup::parse_key(std::string_view key) const {
  if (key == "e" || key.empty()) return identity();
  std::vector<int> word;
  std::size_t i = 0;
  while (i < key.size()) {
    if (key[i] != 's') throw std::invalid_argument("bad element key '" + std::string(key) + "'");
    ++i;
    int s = 0;
    bool any = false;
    while (i < key.size() && key[i] >= '0' && key[i] <= '9') {
      s = s * 10 + (key[i] - '0');
      any = true;
      ++i;
    }
    if (!any) throw std::invalid_argument("bad element key '" + std::string(key) + "'");
    word.push_back(s);
  }
  return from_word(word);
}

Alcove AffineWeylGroup::alcove_of(const AffineElt& a) const {
  const std::uint64_t neg = datum_.inverse_inversions(a.finite);
  RootVec k = datum_.coroot_pairing() * a.translation;
  for (Eigen::Index i = 0; i < k.size(); ++i) k(i) -= static_cast<std::int64_t>((neg >> i) & 1U);
  return {k};
}

AffineElt AffineWeylGroup::element_of_alcove(const Alcove& alcove) const {
  if (alcove.coords.size() != datum_.num_positive_roots())
    throw std::invalid_argument("alcove coordinates have the wrong dimension");
  for (int wi = 0; wi < datum_.weyl_size(); ++wi) {
    const WeylElt w{wi};
    const std::uint64_t neg = datum_.inverse_inversions(w);
    IVec t_weight(rank());
    for (int i = 0; i < rank(); ++i) {
      const int a = datum_.simple_root_index(i);
      t_weight(i) = alcove.coords(a) + static_cast<std::int64_t>((neg >> a) & 1U);
    }
    const auto t = datum_.weight_to_root(t_weight);
    if (!t) continue;
    AffineElt g = make(w, *t);
    if (alcove_of(g) == alcove) return g;
  }
  throw std::invalid_argument("incompatible alcove coordinates");
}

bool AffineWeylGroup::is_alcove(const Alcove& alcove) const {
  try {
    element_of_alcove(alcove);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

WeylElt AffineWeylGroup::chamber_of(const Alcove& alcove) const {
  std::uint64_t mask = 0;
  for (Eigen::Index a = 0; a < alcove.coords.size(); ++a)
    if (alcove.coords(a) < 0) mask |= std::uint64_t{1} << a;
  const auto w = datum_.from_inverse_inversions(mask);
  if (!w) throw std::invalid_argument("alcove sign pattern matches no Weyl chamber");
  return *w;
}

Alcove AffineWeylGroup::alcove_around(const SpecialPoint& v, WeylElt label) const {
  const std::uint64_t neg = datum_.inverse_inversions(label);
  RootVec k(datum_.num_positive_roots());
  for (int a = 0; a < datum_.num_positive_roots(); ++a)
    k(a) = datum_.pair_weight(v.weight, a) - static_cast<std::int64_t>((neg >> a) & 1U);
  return {k};
}

std::vector<LabelledAlcove> AffineWeylGroup::alcoves_around(const SpecialPoint& v) const {
  if (v.weight.size() != rank()) throw std::invalid_argument("special point has the wrong dimension");
  std::vector<LabelledAlcove> out;
  for (WeylElt u : enumerate_weyl(datum_)) out.push_back({u, alcove_around(v, u)});
  return out;
}

IVec AffineWeylGroup::dot_action(const AffineElt& a, const IVec& lambda) const {
  const IVec rho = datum_.rho_weight();
  return datum_.weight_matrix(a.finite) * (lambda + rho) + datum_.root_to_weight(a.translation) - rho;
}

std::vector<std::int64_t> AffineWeylGroup::growth_series(int max_length) const {
  // Exponents from the height distribution of the positive roots.
  std::vector<int> by_height(static_cast<std::size_t>(datum_.num_positive_roots() + 2), 0);
  for (const auto& r : datum_.positive_roots()) ++by_height[static_cast<std::size_t>(r.sum())];
  std::vector<int> exponents;
  for (std::size_t h = 1; h + 1 < by_height.size(); ++h)
    for (int c = by_height[h] - by_height[h + 1]; c > 0; --c) exponents.push_back(static_cast<int>(h));

  std::vector<std::int64_t> series(static_cast<std::size_t>(max_length + 1), 0);
  series[0] = 1;
  for (int m : exponents) {
    // times (1 + q + ... + q^m)
    std::vector<std::int64_t> next(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i)
      for (int j = 0; j <= m && i + static_cast<std::size_t>(j) < series.size(); ++j) next[i + static_cast<std::size_t>(j)] += series[i];
    // divided by (1 - q^m)
    for (std::size_t i = static_cast<std::size_t>(m); i < next.size(); ++i) next[i] += next[i - static_cast<std::size_t>(m)];
    series = std::move(next);
  }
  return series;
}

bool bruhat_leq(const AffineWeylGroup& group, const AffineElt& x, const AffineElt& y) {
  AffineElt a = x;
  AffineElt b = y;
  while (true) {
    if (a.length > b.length) return false;
    if (b.length == 0) return a.length == 0;
    if (a.length == b.length) return a == b;
    // x <= y iff min(x, xs) <= ys for any right descent s of y.
    for (int s = 0; s < group.num_generators(); ++s) {
      AffineElt bs = group.multiply(b, group.generator(s));
      if (bs.length < b.length) {
        AffineElt as = group.multiply(a, group.generator(s));
        if (as.length < a.length) a = std::move(as);
        b = std::move(bs);
        break;
      }
    }
  }
}

// --- Ball ------------------------------------------------------------------

std::size_t Ball::KeyHash::operator()(const std::vector<std::int64_t>& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : k) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::int64_t> Ball::key_of(const AffineElt& a) {
  std::vector<std::int64_t> k{a.finite.index};
  k.insert(k.end(), a.translation.data(), a.translation.data() + a.translation.size());
  return k;
}

Ball::Ball(const AffineWeylGroup& group, int radius, std::size_t cap)
    : group_(&group), radius_(radius), ngens_(group.num_generators()) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const auto series = group.growth_series(radius);
  std::int64_t predicted = 0;
  for (auto c : series) predicted += c;
  if (static_cast<std::size_t>(predicted) > cap)
    throw std::length_error("ball of radius " + std::to_string(radius) + " has " + std::to_string(predicted) +
                            " elements, above the cap of " + std::to_string(cap));

  std::vector<AffineElt> current{group.identity()};
  std::unordered_map<std::vector<std::int64_t>, int, KeyHash> seen;
  auto sort_layer = [](std::vector<AffineElt>& layer) {
    std::sort(layer.begin(), layer.end(), [](const AffineElt& a, const AffineElt& b) {
      if (a.finite.index != b.finite.index) return a.finite.index < b.finite.index;
      return std::lexicographical_compare(a.translation.data(), a.translation.data() + a.translation.size(),
                                          b.translation.data(), b.translation.data() + b.translation.size());
    });
  };
  for (int l = 0; l <= radius; ++l) {
    sort_layer(current);
    layer_start_.push_back(static_cast<int>(elements_.size()));
    for (auto& e : current) {
      index_.emplace(key_of(e), static_cast<int>(elements_.size()));
      elements_.push_back(e);
    }
    if (l == radius) break;
    std::vector<AffineElt> next;
    seen.clear();
    for (const auto& e : current) {
      for (int s = 0; s < ngens_; ++s) {
        AffineElt es = group.multiply(e, group.generator(s));
        if (es.length != l + 1) continue;
        if (seen.emplace(key_of(es), 0).second) next.push_back(std::move(es));
      }
    }
    current = std::move(next);
  }
  layer_start_.push_back(static_cast<int>(elements_.size()));

  const int n = size();
  rmul_.assign(static_cast<std::size_t>(n * ngens_), -1);
  lmul_.assign(static_cast<std::size_t>(n * ngens_), -1);
  inverse_.assign(static_cast<std::size_t>(n), -1);
  desc_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    const AffineElt& e = elements_[static_cast<std::size_t>(i)];
    for (int s = 0; s < ngens_; ++s) {
      const AffineElt r = group.multiply(e, group.generator(s));
      const AffineElt l = group.multiply(group.generator(s), e);
      if (r.length < e.length) desc_[static_cast<std::size_t>(i)].right |= 1U << s;
      if (l.length < e.length) desc_[static_cast<std::size_t>(i)].left |= 1U << s;
      if (auto j = find(r)) rmul_[static_cast<std::size_t>(i * ngens_ + s)] = *j;
      if (auto j = find(l)) lmul_[static_cast<std::size_t>(i * ngens_ + s)] = *j;
    }
    inverse_[static_cast<std::size_t>(i)] = index_of(group.inverse(e));
  }
}

std::optional<int> Ball::find(const AffineElt& a) const {
  const auto it = index_.find(key_of(a));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ball::index_of(const AffineElt& a) const {
  if (auto i = find(a)) return *i;
  throw std::out_of_range("element " + group_->key(a) + " lies outside the ball of radius " + std::to_string(radius_));
}

std::pair<int, int> Ball::layer(int l) const {
  if (l < 0) return {0, 0};
  if (l > radius_) l = radius_;
  return {layer_start_[static_cast<std::size_t>(l)], layer_start_[static_cast<std::size_t>(l + 1)]};
}

// --- Bruhat order ----------------------------------------------------------

BruhatOrder::BruhatOrder(const Ball& ball) : words_((static_cast<std::size_t>(ball.size()) + 63) / 64) {
  const int n = ball.size();
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  auto row = [&](int y) { return rows_.data() + static_cast<std::size_t>(y) * words_; };
  row(0)[0] = 1;
  for (int y = 1; y < n; ++y) {
    int s = 0;
    while (!((ball.right_descents(y) >> s) & 1U)) ++s;
    const int ys = ball.rmul(y, s);
    // {x <= y} = {x <= ys} together with their right translates by s.
    std::uint64_t* dst = row(y);
    const std::uint64_t* src = row(ys);
    for (std::size_t w = 0; w < words_; ++w) dst[w] = src[w];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = src[w];
      while (bits) {
        const int x = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
        const int xs = ball.rmul(x, s);
        dst[static_cast<std::size_t>(xs >> 6)] |= std::uint64_t{1} << (xs & 63);
      }
    }
  }
}

std::vector<int> BruhatOrder::below(int y) const {
  std::vector<int> out;
  const std::uint64_t* r = rows_.data() + static_cast<std::size_t>(y) * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace affcells
