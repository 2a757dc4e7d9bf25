#include "ltlqm/rational.hpp"

#include <numeric>

namespace ltlqm {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool after_point = false;
  // Also accept the a/b form.
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (after_point) den *= 10;
      seen_digit = true;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else if (c == '/' && !after_point && seen_digit) {
      const std::string rest = text.substr(pos + 1);
      std::int64_t d = std::stoll(rest);
      return Rational(neg ? -num : num, d);
    } else {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + text);
  return Rational(neg ? -num : num, den);
}

std::string Rational::to_smt() const {
  if (num < 0) return "(- (/ " + std::to_string(-num) + " " + std::to_string(den) + "))";
  if (den == 1) return std::to_string(num) + ".0";
  return "(/ " + std::to_string(num) + " " + std::to_string(den) + ")";
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace ltlqm
