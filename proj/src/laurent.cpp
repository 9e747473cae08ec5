#include "hecke_lab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::ArithmeticOverflow, "integer addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::ArithmeticOverflow, "integer multiplication");
  return r;
}

Laurent::Laurent(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Laurent Laurent::monomial(std::int64_t coeff, int exponent) {
  Laurent r;
  if (coeff != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(coeff);
  }
  return r;
}

Laurent Laurent::from_map(const std::map<int, std::int64_t>& terms) {
  Laurent r;
  for (const auto& [e, c] : terms) r += monomial(c, e);
  return r;
}

std::int64_t Laurent::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, std::int64_t> Laurent::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out[low_ + static_cast<int>(i)] = coeffs_[i];
  return out;
}

bool Laurent::is_in_q() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && ((low_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

std::optional<std::pair<std::int64_t, int>> Laurent::as_monomial() const {
  if (coeffs_.size() != 1) return std::nullopt;
  return std::make_pair(coeffs_[0], low_);
}

std::int64_t Laurent::at_zero() const {
  if (!is_polynomial()) fail(ErrorCode::NegativePowersPresent, "cannot evaluate " + to_string() + " at v = 0");
  return coeff(0);
}

double Laurent::evaluate(double v) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    acc += static_cast<double>(coeffs_[i]) * std::pow(v, low_ + static_cast<int>(i));
  return acc;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

void Laurent::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                        coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(other.low_ - lo) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.normalize();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int e = low_ + i;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hecke_lab
