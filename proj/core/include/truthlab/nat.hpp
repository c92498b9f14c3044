#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace truthlab {

// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian,
// normalized (no trailing zero limbs). Covers what the kernel needs:
// term values, assignment values and recursively paired syntax codes.
class Nat {
 public:
  Nat() = default;
  Nat(uint64_t v);  // NOLINT: implicit on purpose, numerals are pervasive
  static Nat from_decimal(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  size_t bit_length() const;
  bool bit(size_t i) const;
  std::optional<uint64_t> to_u64() const;
  std::string to_decimal() const;

  Nat& operator+=(const Nat& o);
  Nat& operator-=(const Nat& o);  // requires *this >= o
  Nat operator+(const Nat& o) const;
  Nat operator-(const Nat& o) const;
  Nat operator*(const Nat& o) const;

  // quotient/remainder; divisor must be nonzero
  static void divmod(const Nat& a, const Nat& b, Nat& q, Nat& r);
  Nat operator/(const Nat& o) const;
  Nat operator%(const Nat& o) const;

  Nat operator<<(size_t bits) const;
  Nat operator>>(size_t bits) const;

  std::strong_ordering operator<=>(const Nat& o) const;
  bool operator==(const Nat& o) const = default;

  friend Nat isqrt(const Nat& z);

 private:
  void normalize();
  std::vector<uint32_t> limbs_;
};

Nat isqrt(const Nat& z);

// Cantor pairing on naturals: pair(x, y) = (x+y)(x+y+1)/2 + y.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

}  // namespace truthlab
