#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charid {

/// Exact rational number, always in lowest terms with positive denominator.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Parses "3", "-7", "1/2", "-5/3" or a terminating decimal like "0.25".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

/// Largest integer not exceeding `value`.
BigInt floor(const Rational& value);

/// Parses a comma separated list of rationals ("2,1,0", "1/2, -1/2").
std::vector<Rational> parse_rational_list(std::string_view text);

/// Joins with ", ".
std::string join(std::span<const Rational> values, std::string_view sep = ", ");

/// Rounds `x` to the nearest multiple of 1/denominator.
Rational round_to_denominator(double x, const BigInt& denominator);

}  // namespace charid
