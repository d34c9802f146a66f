#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oracle {

void trim(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

Poly add(const Poly& a, const Poly& b, std::int64_t k, int shift) {
  Poly out = a;
  for (auto [e, c] : b) out[e + shift] += k * c;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto [e, c] : a)
    for (auto [f, d] : b) out[e + f] += c * d;
  trim(out);
  return out;
}

std::vector<std::int64_t> NaiveBall::key(const AffineElt& a) {
  std::vector<std::int64_t> k{a.finite.index};
  for (Eigen::Index i = 0; i < a.translation.size(); ++i) k.push_back(a.translation(i));
  return k;
}

NaiveBall::NaiveBall(const AffineWeylGroup& group, int radius) : group_(&group) {
  elements_.push_back(group.identity());
  index_[key(elements_[0])] = 0;
  std::size_t frontier = 0;
  for (int l = 0; l < radius; ++l) {
    const std::size_t end = elements_.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (int s = 0; s < group.num_generators(); ++s) {
        AffineElt y = group.multiply(elements_[i], group.generator(s));
        if (y.length != l + 1 || index_.count(key(y))) continue;
        index_[key(y)] = static_cast<int>(elements_.size());
        elements_.push_back(y);
      }
    frontier = end;
  }
}

int NaiveBall::find(const AffineElt& a) const {
  auto it = index_.find(key(a));
  return it == index_.end() ? -1 : it->second;
}

bool subword_leq(const AffineWeylGroup& group, const AffineElt& x, const AffineElt& y) {
  const auto word = group.reduced_word(y);
  const std::size_t n = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < static_cast<unsigned>(x.length)) continue;
    AffineElt p = group.identity();
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) p = group.multiply(p, group.generator(word[i]));
    if (p == x) return true;
  }
  return false;
}

int RPolyKL::rmul(int x, int s) const {
  const auto& g = ball_->group();
  return ball_->find(g.multiply((*ball_)[x], g.generator(s)));
}

const Poly& RPolyKL::R(int x, int y) {
  auto it = r_.find({x, y});
  if (it != r_.end()) return it->second;
  Poly out;
  if (x == y) {
    out[0] = 1;
  } else if (leq(x, y)) {
    const auto& g = ball_->group();
    int s = 0;
    while (g.multiply((*ball_)[y], g.generator(s)).length > (*ball_)[y].length) ++s;
    const int ys = rmul(y, s), xs = rmul(x, s);
    if ((*ball_)[x].length > (*ball_)[xs].length) {
      out = R(xs, ys);
    } else {
      // (q - 1) R_{x,ys} + q R_{xs,ys}
      const Poly a = R(x, ys);
      const Poly b = xs >= 0 ? R(xs, ys) : Poly{};
      out = add(add(add(Poly{}, a, 1, 1), a, -1), b, 1, 1);
    }
  }
  return r_.emplace(std::make_pair(x, y), out).first->second;
}

RPolyKL::RPolyKL(const NaiveBall& ball) : ball_(&ball) {
  const int n = ball.size();
  const auto& g = ball.group();
  leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (ball[x].length <= ball[y].length)
        leq_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = subword_leq(g, ball[x], ball[y]);

  p_.assign(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  std::vector<int> by_length(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_length[static_cast<std::size_t>(i)] = i;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](int a, int b) { return ball[a].length > ball[b].length; });
  for (int y = 0; y < n; ++y) {
    auto& col = p_[static_cast<std::size_t>(y)];
    col[static_cast<std::size_t>(y)][0] = 1;
    for (int x : by_length) {
      if (x == y || !leq(x, y)) continue;
      Poly sum;
      for (int z = 0; z < n; ++z)
        if (z != x && leq(x, z) && leq(z, y)) sum = add(sum, mul(R(x, z), col[static_cast<std::size_t>(z)]));
      const int d = ball[y].length - ball[x].length;
      Poly p;
      for (auto [e, c] : sum)
        if (2 * e <= d - 1) p[e] = -c;
      trim(p);
      col[static_cast<std::size_t>(x)] = p;
    }
  }
}

std::vector<std::int64_t> RPolyKL::P(int x, int y) const {
  const Poly& p = p_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
  std::vector<std::int64_t> out;
  for (auto [e, c] : p) {
    if (e < 0) throw std::logic_error("negative power in a KL polynomial");
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(static_cast<std::size_t>(e) + 1, 0);
    out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

namespace {

using HElt = std::map<int, Poly>;

void accumulate(HElt& h, int w, const Poly& c, std::int64_t k = 1, int shift = 0) {
  Poly next = add(h[w], c, k, shift);
  if (next.empty()) h.erase(w);
  else h[w] = next;
}

// C'_w = sum_{x <= w} v^{l(w)-l(x)} P_{x,w}(v^{-2}) H_x.
HElt kl_basis(const NaiveBall& ball, const RPolyKL& kl, int w) {
  HElt h;
  for (int x = 0; x < ball.size(); ++x) {
    if (!kl.leq(x, w)) continue;
    const auto p = kl.P(x, w);
    Poly c;
    for (std::size_t e = 0; e < p.size(); ++e)
      if (p[e]) c[ball[w].length - ball[x].length - 2 * static_cast<int>(e)] = p[e];
    if (!c.empty()) h[x] = c;
  }
  return h;
}

}  // namespace

std::map<int, Poly> product(const NaiveBall& ball, const RPolyKL& kl, int x, int y) {
  const auto& g = ball.group();
  const HElt cx = kl_basis(ball, kl, x);
  const HElt cy = kl_basis(ball, kl, y);
  HElt prod;
  for (const auto& [a, ca] : cx) {
    // H_a H_b by left multiplication with the letters of a, right to left.
    HElt cur = cy;
    const auto word = g.reduced_word(ball[a]);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      HElt next;
      for (const auto& [b, cb] : cur) {
        const int sb = ball.find(g.multiply(g.generator(*it), ball[b]));
        if (sb < 0) throw std::out_of_range("oracle ball too small for the product");
        accumulate(next, sb, cb);
        if (ball[sb].length < ball[b].length) {
          accumulate(next, b, cb, 1, -1);
          accumulate(next, b, cb, -1, 1);
        }
      }
      cur = std::move(next);
    }
    for (const auto& [b, cb] : cur) accumulate(prod, b, mul(ca, cb));
  }
  // Peel off C'_z from the longest remaining term.
  std::map<int, Poly> out;
  while (!prod.empty()) {
    int top = prod.begin()->first;
    for (const auto& [w, c] : prod)
      if (ball[w].length > ball[top].length) top = w;
    const Poly coeff = prod[top];
    out[top] = coeff;
    for (const auto& [w, c] : kl_basis(ball, kl, top)) accumulate(prod, w, mul(coeff, c), -1);
  }
  return out;
}

}  // namespace oracle
