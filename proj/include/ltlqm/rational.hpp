#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ltlqm {

/// Exact rational with 64-bit components. Used wherever a value must be
/// emitted into a solver script without floating-point rounding.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  static Rational from_decimal(const std::string& text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_smt() const;
  std::string to_string() const;

  bool positive() const { return num > 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace ltlqm
