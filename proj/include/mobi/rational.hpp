#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mobi {

// Expression templates off: generic code binds results with auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p/q", integers and finite decimals ("0.25", "-3", "7/4").
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("2/1").
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

// Largest integer not above value.
Rational floor_rational(const Rational& value);

}  // namespace mobi
