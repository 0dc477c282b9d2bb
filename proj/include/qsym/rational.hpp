#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-0.25", "3/4", "+1.5/2". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Integers print bare, terminating fractions as decimals, everything else as
// "p/q". The output always parses back to the same value.
std::string format_rational(const Rational& value);

struct RationalHash {
  std::size_t operator()(const Rational& value) const;
};

}  // namespace qsym
