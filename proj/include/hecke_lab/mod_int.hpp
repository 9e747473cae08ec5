#pragma once

#include <cstdint>
#include <string>

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

/// Element of Z/pZ. The modulus travels with the value so matrices over
/// different primes cannot be mixed silently.
struct ModInt {
  std::int64_t value = 0;
  std::int64_t modulus = 0;

  ModInt() = default;
  ModInt(std::int64_t v, std::int64_t p) : value(((v % p) + p) % p), modulus(p) {}

  friend ModInt operator+(ModInt a, ModInt b) { return {a.value + b.value, common(a, b)}; }
  friend ModInt operator-(ModInt a, ModInt b) { return {a.value - b.value, common(a, b)}; }
  friend ModInt operator*(ModInt a, ModInt b) {
    const std::int64_t p = common(a, b);
    return {static_cast<std::int64_t>((static_cast<__int128>(a.value) * b.value) % p), p};
  }
  ModInt operator-() const { return {-value, modulus}; }
  ModInt& operator+=(ModInt b) { return *this = *this + b; }
  ModInt& operator-=(ModInt b) { return *this = *this - b; }
  ModInt& operator*=(ModInt b) { return *this = *this * b; }
  friend bool operator==(ModInt a, ModInt b) { return a.value == b.value && a.modulus == b.modulus; }
  friend bool operator!=(ModInt a, ModInt b) { return !(a == b); }

  bool is_zero() const { return value == 0; }
  /// Representative in (-p/2, p/2], so -1 prints as -1.
  std::int64_t centered() const { return value > modulus / 2 ? value - modulus : value; }
  std::string to_string() const { return std::to_string(centered()); }

 private:
  static std::int64_t common(ModInt a, ModInt b) {
    if (a.modulus != b.modulus) fail(ErrorCode::DatumMismatch, "mixing residues modulo different primes");
    return a.modulus;
  }
};

bool is_prime(std::int64_t p);

}  // namespace hecke_lab
