#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rowmotion {

/// Exact rational number; always kept in lowest terms.
using Rational = mpq_class;

/// Parses `p/q`, an integer, or a decimal literal such as `0.7` or `-.25`.
/// Decimals convert exactly (0.7 == 7/10). Throws ParseError.
Rational parse_rational(std::string_view text);

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& q);

/// Terminating decimal expansion, or nullopt if the denominator has a prime
/// factor other than 2 and 5.
std::optional<std::string> to_decimal(const Rational& q);

}  // namespace rowmotion
