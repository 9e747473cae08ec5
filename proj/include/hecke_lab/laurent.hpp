#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke_lab {

/// Element of the integer Laurent ring Z[v, 1/v].
///
/// The variable v stands for a square root of q, so q_s = v^(2 d(s)).
/// Stored densely from the lowest nonzero exponent; the zero element has no
/// coefficients. Arithmetic is exact and throws ArithmeticOverflow rather
/// than wrapping.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::int64_t constant);  // NOLINT: integers embed implicitly

  static Laurent monomial(std::int64_t coeff, int exponent);
  /// v^(2 d), the parameter q_s of a reflection with decoration d.
  static Laurent q_power(int d) { return monomial(1, 2 * d); }
  static Laurent from_map(const std::map<int, std::int64_t>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponent; only meaningful when nonzero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  std::map<int, std::int64_t> terms() const;

  /// True when no negative power of v occurs.
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  /// True when every occurring exponent is even (an element of Z[q^{±1}]).
  bool is_in_q() const;
  /// Single term c v^k, returned as (c, k).
  std::optional<std::pair<std::int64_t, int>> as_monomial() const;

  /// Value at v = 0; requires is_polynomial().
  std::int64_t at_zero() const;
  double evaluate(double v) const;

  Laurent shifted(int k) const;  // multiply by v^k

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Human-readable form such as "v^2 - 1".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hecke_lab
