#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace linedig {

// Exact arithmetic everywhere: arbitrary-precision integers for counts and
// matrix entries, rationals where elimination needs them.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Renders a rational as "p" when integral, "p/q" otherwise.
std::string to_decimal(const Rat& v);

/// True iff the rational has denominator 1.
bool is_integral(const Rat& v);

/// Parses "123", "-4", "3/7" or a plain decimal like "0.25" into an exact rational.
/// Throws ParseError on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace linedig
