#include "affcells/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace affcells {

LaurentPoly::LaurentPoly(std::int64_t c, int e) : low_(e) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<std::int64_t> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > degree()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c >= 0; });
}

LaurentPoly LaurentPoly::bar() const {
  if (c_.empty()) return {};
  std::vector<std::int64_t> r(c_.rbegin(), c_.rend());
  return LaurentPoly(-degree(), std::move(r));
}

LaurentPoly LaurentPoly::stretch(int k) const {
  if (k < 1) throw std::invalid_argument("stretch factor must be positive");
  if (c_.empty()) return {};
  std::vector<std::int64_t> r((c_.size() - 1) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
  return LaurentPoly(low_ * k, std::move(r));
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly out = *this;
  if (!out.c_.empty()) out.low_ += e;
  return out;
}

LaurentPoly LaurentPoly::truncated_below(int e) const {
  if (c_.empty() || e <= low_) return {};
  const auto keep = std::min(c_.size(), static_cast<std::size_t>(e - low_));
  return LaurentPoly(low_, std::vector<std::int64_t>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

void LaurentPoly::add_scaled(const LaurentPoly& o, std::int64_t k, int e) {
  if (o.c_.empty() || k == 0) return;
  const int olow = o.low_ + e;
  const int ohigh = o.degree() + e;
  if (c_.empty()) {
    low_ = olow;
    c_.assign(o.c_.size(), 0);
  } else {
    if (olow < low_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(low_ - olow), 0);
      low_ = olow;
    }
    if (ohigh > degree()) c_.resize(static_cast<std::size_t>(ohigh - low_ + 1), 0);
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(olow - low_) + i] += k * o.c_[i];
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return LaurentPoly(a.low_ + b.low_, std::move(r));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t c = c_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace affcells
