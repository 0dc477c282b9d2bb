#include "qsym/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace qsym {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty() && whole.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  if (!whole.empty() && !all_digits(whole)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  if (!frac.empty() && !all_digits(frac)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  if (whole.empty() && frac.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  BigInt numerator = 0;
  for (char c : whole) numerator = numerator * 10 + (c - '0');
  BigInt denominator = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  return Rational(numerator, denominator);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    value = parse_decimal(text);
  } else {
    const Rational denominator = parse_decimal(text.substr(slash + 1));
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value = parse_decimal(text.substr(0, slash)) / denominator;
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Terminating decimal iff the reduced denominator is 2^a 5^b.
  BigInt rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const int digits = std::max(twos, fives);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = boost::multiprecision::abs(num) * (scale / den);
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits - static_cast<int>(body.size()) + 1), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (num < 0 ? "-" : "") + body;
}

std::size_t RationalHash::operator()(const Rational& value) const {
  return std::hash<std::string>{}(value.str());
}

}  // namespace qsym
