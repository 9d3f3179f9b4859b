#pragma once

// Per-type behaviour for carrier values: distances for approximate
// comparison, JSON rendering for reports, conversion to plain coordinates.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mobi/rational.hpp"

namespace mobi {

// Residue class of Z_n.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  // Throws DomainError when value is not a unit.
  ModInt inverse() const;

  friend ModInt operator+(const ModInt& a, const ModInt& b);
  friend ModInt operator-(const ModInt& a, const ModInt& b);
  friend ModInt operator*(const ModInt& a, const ModInt& b);
  friend ModInt operator-(const ModInt& a);
  friend bool operator==(const ModInt&, const ModInt&) = default;

 private:
  std::int64_t value_ = 0;
  std::int64_t modulus_ = 1;
};

// A self-map of Z_n stored as its value table.
struct EndoMap {
  std::vector<int> table;

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
  std::size_t size() const { return table.size(); }
  friend auto operator<=>(const EndoMap&, const EndoMap&) = default;
};

// Relative-plus-absolute discrepancy: |a-b| / (1 + max(|a|,|b|)).
double value_distance(double a, double b);
double value_distance(const Rational& a, const Rational& b);
double value_distance(const ModInt& a, const ModInt& b);
double value_distance(const EndoMap& a, const EndoMap& b);
template <class T>
double value_distance(const std::vector<T>& a, const std::vector<T>& b);
template <class T, std::size_t N>
double value_distance(const std::array<T, N>& a, const std::array<T, N>& b);

void append_json(std::string& out, double value);
void append_json(std::string& out, int value);
void append_json(std::string& out, const Rational& value);
void append_json(std::string& out, const ModInt& value);
void append_json(std::string& out, const EndoMap& value);
template <class T>
void append_json(std::string& out, const std::vector<T>& value);
template <class T, std::size_t N>
void append_json(std::string& out, const std::array<T, N>& value);

template <class T>
std::string json_text(const T& value) {
  std::string out;
  append_json(out, value);
  return out;
}

// Products: maximum of component distances; size mismatch is infinitely far.
template <class T>
double value_distance(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = value_distance(a[i], b[i]);
    if (std::isnan(d)) return NAN;
    worst = std::max(worst, d);
  }
  return worst;
}

template <class T, std::size_t N>
double value_distance(const std::array<T, N>& a, const std::array<T, N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double d = value_distance(a[i], b[i]);
    if (std::isnan(d)) return NAN;
    worst = std::max(worst, d);
  }
  return worst;
}

template <class T>
void append_json(std::string& out, const std::vector<T>& value) {
  out.push_back('[');
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i != 0) out.push_back(',');
    append_json(out, value[i]);
  }
  out.push_back(']');
}

template <class T, std::size_t N>
void append_json(std::string& out, const std::array<T, N>& value) {
  out.push_back('[');
  for (std::size_t i = 0; i < N; ++i) {
    if (i != 0) out.push_back(',');
    append_json(out, value[i]);
  }
  out.push_back(']');
}

// Decimal with 17 significant digits; non-finite values become null.
std::string format_double(double value);

// Plain coordinates, used by trace export and cross-backend comparison.
inline std::vector<double> coordinates(double v) { return {v}; }
inline std::vector<double> coordinates(const Rational& v) { return {to_double(v)}; }
template <class T>
std::vector<double> coordinates(const std::vector<T>& v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(coordinates(c).front());
  return out;
}
template <class T, std::size_t N>
std::vector<double> coordinates(const std::array<T, N>& v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(coordinates(c).front());
  return out;
}

// Scalar construction shared by the exact and floating backends.
template <class S>
S ratio(long numerator, long denominator = 1);

template <>
inline double ratio<double>(long numerator, long denominator) {
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

template <>
inline Rational ratio<Rational>(long numerator, long denominator) {
  return Rational(numerator, denominator);
}

template <class S>
S from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}

template <>
inline double from_rational<double>(const Rational& r) {
  return to_double(r);
}

template <class S>
inline constexpr bool is_exact_scalar = std::is_same_v<S, Rational>;

// Allowance on closed-set boundaries: zero when exact, roundoff-sized for doubles.
template <class S>
S boundary_slack() {
  if constexpr (is_exact_scalar<S>) return S(0);
  else return S(1e-12);
}

inline double abs_value(double v) { return std::fabs(v); }
inline Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace mobi
