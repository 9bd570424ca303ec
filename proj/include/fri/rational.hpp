#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fri {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

// Parses "0.85", "-3", "1.5e-2" or "13/15" into an exact rational.
// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// "13/15", "1", "0", "-2/3".
std::string to_exact_string(const Rational& value);

// The shortest exact decimal rendering ("0.85", "1", "0.125") when the
// denominator has no prime factors other than 2 and 5.
std::optional<std::string> to_terminating_decimal(const Rational& value);

// Decimal approximation rounded half-up to `significant` digits, trailing
// zeros stripped. Advisory only.
std::string to_approx_string(const Rational& value, int significant = 12);

inline std::strong_ordering compare(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// A value in [0, 1]: a matrix entry, a coordinate, or an optimal value.
class UnitScalar {
 public:
  UnitScalar() = default;
  // Throws InputError unless 0 <= value <= 1.
  explicit UnitScalar(Rational value);

  static UnitScalar zero() { return UnitScalar(); }
  static UnitScalar one() { return UnitScalar(Rational(1)); }

  const Rational& value() const { return value_; }

  friend bool operator==(const UnitScalar& lhs, const UnitScalar& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const UnitScalar& lhs, const UnitScalar& rhs) {
    return compare(lhs.value_, rhs.value_);
  }

 private:
  Rational value_{0};
};

// A strictly positive right-hand side b_i.
class Requirement {
 public:
  // Throws InputError unless value > 0.
  explicit Requirement(Rational value);

  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

}  // namespace fri
