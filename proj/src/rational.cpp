#include "mobi/rational.hpp"

#include <algorithm>
#include <cctype>

#include "mobi/errors.hpp"

namespace mobi {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)) || (dot != std::string_view::npos && frac.empty() && whole.empty()))
    throw ConfigurationError("not a rational number: '" + std::string(text) + "'");
  // leading zeros would make the string read as octal
  std::string digits = std::string(whole) + std::string(frac);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  boost::multiprecision::mpz_int num(digits.empty() ? "0" : digits);
  boost::multiprecision::mpz_int den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw ConfigurationError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational floor_rational(const Rational& value) {
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(value);
  mpz_int den = boost::multiprecision::denominator(value);
  mpz_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

}  // namespace mobi
