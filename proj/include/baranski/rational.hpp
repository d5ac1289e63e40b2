#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace baranski {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p". Throws Error(Parse) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace baranski
