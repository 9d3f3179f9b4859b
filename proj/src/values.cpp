#include "mobi/values.hpp"

#include <cstdio>
#include <numeric>
#include <tuple>

#include "mobi/errors.hpp"

namespace mobi {

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  value_ = ((value % modulus) + modulus) % modulus;
}

ModInt ModInt::inverse() const {
  // Extended Euclid on (value, modulus).
  std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  if (r0 != 1) throw DomainError(std::to_string(value_) + " has no inverse mod " + std::to_string(modulus_));
  return ModInt(t0, modulus_);
}

static void same_modulus(const ModInt& a, const ModInt& b) {
  if (a.modulus() != b.modulus()) throw DomainError("mixed moduli");
}

ModInt operator+(const ModInt& a, const ModInt& b) {
  same_modulus(a, b);
  return ModInt(a.value() + b.value(), a.modulus());
}

ModInt operator-(const ModInt& a, const ModInt& b) {
  same_modulus(a, b);
  return ModInt(a.value() - b.value(), a.modulus());
}

ModInt operator*(const ModInt& a, const ModInt& b) {
  same_modulus(a, b);
  return ModInt(a.value() * b.value(), a.modulus());
}

ModInt operator-(const ModInt& a) { return ModInt(-a.value(), a.modulus()); }

double value_distance(double a, double b) {
  if (a == b) return 0.0;  // also equal infinities
  return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

double value_distance(const Rational& a, const Rational& b) {
  if (a == b) return 0.0;
  const Rational diff = abs_value(Rational(a - b));
  const Rational scale = 1 + std::max(abs_value(a), abs_value(b));
  return to_double(Rational(diff / scale));
}

double value_distance(const ModInt& a, const ModInt& b) { return a == b ? 0.0 : 1.0; }

double value_distance(const EndoMap& a, const EndoMap& b) { return a == b ? 0.0 : 1.0; }

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void append_json(std::string& out, double value) { out += format_double(value); }

void append_json(std::string& out, const Rational& value) {
  out.push_back('"');
  out += format_rational(value);
  out.push_back('"');
}

void append_json(std::string& out, int value) { out += std::to_string(value); }

void append_json(std::string& out, const ModInt& value) { out += std::to_string(value.value()); }

void append_json(std::string& out, const EndoMap& value) { append_json(out, value.table); }

}  // namespace mobi
