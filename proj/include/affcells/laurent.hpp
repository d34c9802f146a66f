#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affcells {

/// Integer Laurent polynomial in one variable.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has no
/// coefficients, and no leading or trailing zero is ever kept.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// The constant c.
  explicit LaurentPoly(std::int64_t c) : LaurentPoly(c, 0) {}
  /// The monomial c * x^e.
  LaurentPoly(std::int64_t c, int e);
  /// Coefficients of x^low, x^(low+1), ...
  LaurentPoly(int low, std::vector<std::int64_t> coeffs);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(1); }

  bool is_zero() const { return c_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const { return c_.empty() ? 0 : low_; }
  /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
  int degree() const { return c_.empty() ? 0 : low_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const;
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool nonnegative() const;

  /// x -> x^{-1}.
  LaurentPoly bar() const;
  /// Multiplies every exponent by k (k >= 1), e.g. q -> v^2.
  LaurentPoly stretch(int k) const;
  /// Multiplication by x^e.
  LaurentPoly shifted(int e) const;
  /// Terms with exponent strictly below e.
  LaurentPoly truncated_below(int e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t k);
  /// this += k * x^e * o, without temporaries.
  void add_scaled(const LaurentPoly& o, std::int64_t k, int e);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t k) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form such as "1 + 2q^2" or "v^-1 + v".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace affcells
