#include "affcells/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace affcells {
namespace {

struct TypeSpec {
  char series;
  int min_rank;
  int max_rank;
};

constexpr TypeSpec kSupported[] = {
    {'A', 1, 4}, {'B', 2, 4}, {'C', 2, 4}, {'D', 4, 4}, {'F', 4, 4}, {'G', 2, 2},
};

bool is_supported(CartanType t) {
  return std::any_of(std::begin(kSupported), std::end(kSupported), [&](const TypeSpec& s) {
    return s.series == t.series && t.rank >= s.min_rank && t.rank <= s.max_rank;
  });
}

std::string supported_list() {
  std::ostringstream os;
  bool first = true;
  for (const auto& name : supported_types()) {
    os << (first ? "" : ", ") << name;
    first = false;
  }
  return os.str();
}

// Squared lengths of simple roots (Bourbaki numbering) and the Dynkin edges.
void dynkin_data(CartanType t, IVec& norms, std::vector<std::pair<int, int>>& edges) {
  const int n = t.rank;
  norms = IVec::Ones(n);
  edges.clear();
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  switch (t.series) {
    case 'A':
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) norms(i) = 2;
      break;
    case 'C':
      norms(n - 1) = 2;
      break;
    case 'D':
      edges.back() = {n - 3, n - 1};
      break;
    case 'F':
      norms(0) = norms(1) = 2;
      break;
    case 'G':
      norms(1) = 3;
      break;
    default:
      break;
  }
}

std::vector<std::int64_t> key_of(const IMat& m) {
  return std::vector<std::int64_t>(m.data(), m.data() + m.size());
}

bool is_negative(const IVec& v) { return (v.array() <= 0).all() && (v.array() < 0).any(); }

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("unknown type '" + std::string(text) + "'");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int r = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("unknown type '" + std::string(text) + "'");
    r = r * 10 + (text[i] - '0');
  }
  t.rank = r;
  if (!is_supported(t))
    throw std::invalid_argument("unsupported type '" + std::string(text) +
                                "'; supported types: " + supported_list());
  return t;
}

std::vector<std::string> supported_types() {
  std::vector<std::string> out;
  for (const auto& s : kSupported)
    for (int r = s.min_rank; r <= s.max_rank; ++r) out.push_back(std::string(1, s.series) + std::to_string(r));
  return out;
}

RootDatum::RootDatum(CartanType type) : type_(type) {
  if (!is_supported(type))
    throw std::invalid_argument("unsupported type '" + type.name() + "'; supported types: " + supported_list());
  std::vector<std::pair<int, int>> edges;
  dynkin_data(type, norms_, edges);
  const int n = rank();
  // Doubled Gram matrix: 2(alpha_i, alpha_j).
  IMat gram2 = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) gram2(i, i) = 2 * norms_(i);
  for (auto [i, j] : edges) gram2(i, j) = gram2(j, i) = -std::max(norms_(i), norms_(j));
  cartan_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_(i, j) = gram2(i, j) / norms_(i);
  cartan_det_ = exact_determinant<std::int64_t>(cartan_);
  cartan_adj_ = adjugate<std::int64_t>(cartan_);
  build_roots();
  build_weyl();
}

void RootDatum::build_roots() {
  const int n = rank();
  // Closure of the simple roots under simple reflections, keeping positive roots.
  std::vector<IVec> roots;
  std::map<std::vector<std::int64_t>, bool> seen;
  auto key = [](const IVec& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); };
  for (int i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e(i) = 1;
    roots.push_back(e);
    seen[key(e)] = true;
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const IVec beta = roots[k];
      const std::int64_t p = cartan_.row(i).dot(beta);
      IVec img = beta;
      img(i) -= p;
      if ((img.array() >= 0).all() && !img.isZero() && !seen.count(key(img))) {
        seen[key(img)] = true;
        roots.push_back(img);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [&](const IVec& a, const IVec& b) { return key(a) < key(b); });
  pos_roots_ = roots;

  const auto N = pos_roots_.size();
  coroots_.resize(N);
  coroot_pairing_.resize(static_cast<Eigen::Index>(N), n);
  simple_index_.assign(static_cast<std::size_t>(n), -1);
  std::int64_t best_height = -1;
  for (std::size_t a = 0; a < N; ++a) {
    const IVec& c = pos_roots_[a];
    // (alpha, alpha) relative to the normalization of norms_.
    std::int64_t norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += c(i) * c(j) * norms_(i) * cartan_(i, j);
    const std::int64_t norm = norm2 / 2;
    IVec b(n);
    for (int i = 0; i < n; ++i) b(i) = c(i) * norms_(i) / norm;
    coroots_[a] = b;
    coroot_pairing_.row(static_cast<Eigen::Index>(a)) = (b.transpose() * cartan_);
    if (c.sum() == 1) {
      for (int i = 0; i < n; ++i)
        if (c(i) == 1) simple_index_[static_cast<std::size_t>(i)] = static_cast<int>(a);
    }
    if (b.sum() > best_height) {
      best_height = b.sum();
      theta_ = static_cast<int>(a);
    }
  }
}

void RootDatum::build_weyl() {
  const int n = rank();
  const int N = num_positive_roots();
  std::vector<IMat> gens_root(static_cast<std::size_t>(n)), gens_weight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    IMat s = IMat::Identity(n, n);
    s.row(i) -= cartan_.row(i);
    gens_root[static_cast<std::size_t>(i)] = s;
    IMat sw = IMat::Identity(n, n);
    sw.col(i) -= cartan_.col(i);
    gens_weight[static_cast<std::size_t>(i)] = sw;
  }

  std::map<std::vector<std::int64_t>, int> index;
  std::vector<int> parent{-1};
  std::vector<int> parent_gen{-1};
  Element id;
  id.on_roots = IMat::Identity(n, n);
  id.on_weights = IMat::Identity(n, n);
  weyl_.push_back(id);
  index[key_of(id.on_roots)] = 0;
  std::vector<int> rmul;
  for (std::size_t k = 0; k < weyl_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IMat m = weyl_[k].on_roots * gens_root[static_cast<std::size_t>(i)];
      auto [it, inserted] = index.emplace(key_of(m), static_cast<int>(weyl_.size()));
      if (inserted) {
        Element e;
        e.on_roots = m;
        e.on_weights = weyl_[k].on_weights * gens_weight[static_cast<std::size_t>(i)];
        weyl_.push_back(e);
        parent.push_back(static_cast<int>(k));
        parent_gen.push_back(i);
      }
      rmul.push_back(it->second);
    }
  }
  const int order = weyl_size();

  mult_.assign(static_cast<std::size_t>(order * order), 0);
  for (int a = 0; a < order; ++a) {
    mult_[static_cast<std::size_t>(a * order)] = a;
    for (int b = 1; b < order; ++b) {
      const int prefix = mult_[static_cast<std::size_t>(a * order + parent[static_cast<std::size_t>(b)])];
      mult_[static_cast<std::size_t>(a * order + b)] =
          rmul[static_cast<std::size_t>(prefix * n + parent_gen[static_cast<std::size_t>(b)])];
    }
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mult_[static_cast<std::size_t>(a * order + b)] == 0) weyl_[static_cast<std::size_t>(a)].inverse = b;

  for (auto& e : weyl_) {
    int len = 0;
    for (const auto& r : pos_roots_)
      if (is_negative(e.on_roots * r)) ++len;
    e.length = len;
  }
  for (auto& e : weyl_) {
    const IMat& inv = weyl_[static_cast<std::size_t>(e.inverse)].on_roots;
    std::uint64_t mask = 0;
    for (int a = 0; a < N; ++a)
      if (is_negative(inv * pos_roots_[static_cast<std::size_t>(a)])) mask |= (std::uint64_t{1} << a);
    e.inv_inversions = mask;
  }

  simple_refl_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) simple_refl_[static_cast<std::size_t>(i)] = index.at(key_of(gens_root[static_cast<std::size_t>(i)]));
  for (int a = 0; a < order; ++a) {
    // Lexicographically first reduced word: peel off the smallest left descent.
    int cur = a;
    std::vector<int> w;
    while (cur != 0) {
      for (int i = 0; i < n; ++i) {
        const int left = mult_[static_cast<std::size_t>(simple_refl_[static_cast<std::size_t>(i)] * order + cur)];
        if (weyl_[static_cast<std::size_t>(left)].length < weyl_[static_cast<std::size_t>(cur)].length) {
          w.push_back(i + 1);
          cur = left;
          break;
        }
      }
    }
    weyl_[static_cast<std::size_t>(a)].word = w;
  }
  longest_ = static_cast<int>(std::max_element(weyl_.begin(), weyl_.end(),
                                               [](const Element& x, const Element& y) { return x.length < y.length; }) -
                              weyl_.begin());

  reflections_.resize(static_cast<std::size_t>(N));
  for (int a = 0; a < N; ++a) {
    IMat s = IMat::Identity(n, n);
    s -= pos_roots_[static_cast<std::size_t>(a)] * coroot_pairing_.row(a);
    reflections_[static_cast<std::size_t>(a)] = index.at(key_of(s));
  }
}

std::optional<WeylElt> RootDatum::from_inverse_inversions(std::uint64_t mask) const {
  for (int i = 0; i < weyl_size(); ++i)
    if (weyl_[static_cast<std::size_t>(i)].inv_inversions == mask) return WeylElt{i};
  return std::nullopt;
}

std::vector<WeylElt> RootDatum::parabolic_subgroup(const std::vector<int>& simple) const {
  std::vector<WeylElt> out{identity()};
  std::vector<bool> seen(static_cast<std::size_t>(weyl_size()), false);
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : simple) {
      if (i < 1 || i > rank()) throw std::invalid_argument("simple root index out of range");
      const WeylElt next = multiply(out[k], simple_reflection(i - 1));
      if (!seen[static_cast<std::size_t>(next.index)]) {
        seen[static_cast<std::size_t>(next.index)] = true;
        out.push_back(next);
      }
    }
  }
  return out;
}

std::vector<QVec> RootDatum::fundamental_weights() const {
  std::vector<QVec> out;
  for (int i = 0; i < rank(); ++i) {
    IVec e = IVec::Zero(rank());
    e(i) = 1;
    out.push_back(weight_to_root_rational(e));
  }
  return out;
}

QVec RootDatum::rho() const { return weight_to_root_rational(rho_weight()); }

QVec RootDatum::weight_to_root_rational(const IVec& weight) const {
  const IVec scaled = cartan_adj_ * weight;
  QVec out(rank());
  for (int i = 0; i < rank(); ++i) out(i) = Rational(scaled(i), cartan_det_);
  return out;
}

std::optional<IVec> RootDatum::weight_to_root(const IVec& weight) const {
  const IVec scaled = cartan_adj_ * weight;
  IVec out(rank());
  for (int i = 0; i < rank(); ++i) {
    if (scaled(i) % cartan_det_ != 0) return std::nullopt;
    out(i) = scaled(i) / cartan_det_;
  }
  return out;
}

RootDatum build_root_datum(char series, int rank) { return RootDatum(CartanType{series, rank}); }

std::vector<WeylElt> enumerate_weyl(const RootDatum& datum) {
  std::vector<WeylElt> out;
  out.reserve(static_cast<std::size_t>(datum.weyl_size()));
  for (int i = 0; i < datum.weyl_size(); ++i) out.push_back({i});
  return out;
}

IVec dot_action(const RootDatum& datum, WeylElt w, const IVec& lambda) {
  const IVec rho = datum.rho_weight();
  return datum.weight_matrix(w) * (lambda + rho) - rho;
}

}  // namespace affcells
