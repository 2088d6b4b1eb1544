#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crn {

using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal string ("2", "-68", "0.58", "1/3") into an exact
/// rational. Returns nullopt on malformed input.
std::optional<Rational> parse_decimal(const std::string& text);

/// Renders a rational as a plain decimal when the denominator is a product
/// of 2s and 5s, otherwise as "p/q".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Exact rank via fraction-based Gaussian elimination.
int rational_rank(RationalMatrix mat);

}  // namespace crn
