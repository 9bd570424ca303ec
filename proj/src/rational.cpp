#include "fri/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "fri/errors.hpp"

namespace fri {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw InputError("not a number literal: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(original);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(original) + "\"");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(original);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_literal(original);
    if (!int_part.empty() && !all_digits(int_part)) bad_literal(original);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(original);

    const std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_exact_string(const Rational& value) { return value.get_str(10); }

std::optional<std::string> to_terminating_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;

  const unsigned long places = std::max(twos, fives);
  mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

std::string to_approx_string(const Rational& value, int significant) {
  if (value == 0) return "0";
  Rational magnitude = abs(value);
  // Find e with 10^e <= magnitude < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(magnitude.get_den().get_mpz_t(), 10));
  auto power = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                  : Rational(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (magnitude < power(e)) --e;
  while (magnitude >= power(e + 1)) ++e;

  const long shift = significant - 1 - e;
  Rational scaled = magnitude * power(shift);
  // Round half up.
  mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  Rational approx = Rational(rounded) / power(shift);
  approx.canonicalize();
  // The rounded value has a terminating expansion by construction.
  std::string text = *to_terminating_decimal(approx);
  return value < 0 ? "-" + text : text;
}

UnitScalar::UnitScalar(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1)
    throw InputError("value " + to_exact_string(value_) + " outside [0, 1]");
}

Requirement::Requirement(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0)
    throw InputError("requirement " + to_exact_string(value_) + " must be positive");
}

}  // namespace fri
