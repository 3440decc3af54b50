#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace whirl {

// An exact rational k/3^e in [0, 1], always kept in canonical form: either the
// exponent is zero or 3 does not divide the numerator. Canonical form makes
// structural equality coincide with equality of values.
class TriadicRational {
 public:
  constexpr TriadicRational() = default;

  // Canonicalizes numerator/3^exponent. Throws RangeError unless
  // 0 <= numerator <= 3^exponent and exponent >= 0.
  static TriadicRational make(std::int64_t numerator, int exponent);

  static TriadicRational zero() { return {}; }
  static TriadicRational one() { return make(1, 0); }

  std::int64_t numerator() const { return numerator_; }
  int exponent() const { return exponent_; }

  // Numerator over the common denominator 3^level (level >= exponent()).
  std::int64_t scaled_to(int level) const;

  friend bool operator==(const TriadicRational&, const TriadicRational&) = default;
  friend std::strong_ordering operator<=>(const TriadicRational& a, const TriadicRational& b);

 private:
  constexpr TriadicRational(std::int64_t n, int e) : numerator_(n), exponent_(e) {}

  std::int64_t numerator_ = 0;
  int exponent_ = 0;
};

// Serializes as "p/q" with q = 3^exponent ("0/1" and "1/1" for the endpoints).
std::string to_label(const TriadicRational& t);
// Accepts any "p/q" with q a power of three and canonicalizes it.
TriadicRational parse_triadic(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TriadicRational& t);

}  // namespace whirl

template <>
struct std::hash<whirl::TriadicRational> {
  std::size_t operator()(const whirl::TriadicRational& t) const noexcept {
    return std::hash<std::int64_t>{}(t.numerator()) * 31 + static_cast<std::size_t>(t.exponent());
  }
};
