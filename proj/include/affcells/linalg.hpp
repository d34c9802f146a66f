#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace affcells {

/// Largest rank handled by the fixed-capacity vector and matrix types.
inline constexpr int kMaxRank = 4;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, kMaxRank, 1>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

using IVec = Vec<std::int64_t>;
using IMat = Mat<std::int64_t>;

/// One integer per positive root; unbounded, since N exceeds the rank cap.
using RootVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) {
    *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    *this = Rational(num_ * o.num_, den_ * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    *this = Rational(num_ * o.den_, den_ * o.num_);
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace affcells

namespace Eigen {
template <>
struct NumTraits<affcells::Rational> : GenericNumTraits<affcells::Rational> {
  using Real = affcells::Rational;
  using NonInteger = affcells::Rational;
  using Nested = affcells::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
};
}  // namespace Eigen

namespace affcells {

using QVec = Vec<Rational>;

/// Determinant by cofactor expansion; exact for integer scalars.
template <typename Scalar>
Scalar exact_determinant(const Mat<Scalar>& m) {
  const auto n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Mat<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Scalar term = m(0, j) * exact_determinant<Scalar>(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Classical adjugate, so that m * adjugate(m) == det(m) * I.
template <typename Scalar>
Mat<Scalar> adjugate(const Mat<Scalar>& m) {
  const auto n = m.rows();
  Mat<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat<Scalar> minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      const Scalar cof = exact_determinant<Scalar>(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Scalar(0) - cof;
    }
  }
  return adj;
}

inline QVec to_rational(const IVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

}  // namespace affcells
