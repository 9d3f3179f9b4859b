#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mobi/values.hpp"

namespace mobi {

using Rng = std::mt19937_64;

// Uniform in [0, n). Modulo bias is irrelevant here; determinism is not.
inline std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

// Uniform double in [0, 1).
inline double unit_double(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Random scalar in [lo, hi]. The exact backend draws p/q with q <= max_denominator.
template <class S>
S random_scalar(Rng& rng, const Rational& lo, const Rational& hi, long max_denominator = 16) {
  if constexpr (is_exact_scalar<S>) {
    const long den = 1 + static_cast<long>(below(rng, static_cast<std::uint64_t>(max_denominator)));
    Rational scaled_lo = lo * den;
    Rational scaled_hi = hi * den;
    Rational first = -floor_rational(-scaled_lo);  // ceil
    Rational last = floor_rational(scaled_hi);
    const long low = static_cast<long>(boost::multiprecision::numerator(first).convert_to<long>());
    const long high = static_cast<long>(boost::multiprecision::numerator(last).convert_to<long>());
    if (high < low) return lo;
    const long num = low + static_cast<long>(below(rng, static_cast<std::uint64_t>(high - low + 1)));
    return Rational(num, den);
  } else {
    const double a = to_double(lo);
    const double b = to_double(hi);
    return a + (b - a) * unit_double(rng);
  }
}

// A value domain: membership, a random generator, distinguished anchor
// values (constants, boundary points) and, for finite domains, all elements.
template <class T>
struct Carrier {
  std::string name;
  std::function<bool(const T&)> contains;
  std::function<T(Rng&)> draw;
  std::vector<T> anchors;
  std::vector<T> elements;

  bool finite() const { return !elements.empty(); }
  bool has(const T& value) const { return !contains || contains(value); }
};

template <class T>
Carrier<T> finite_carrier(std::string name, std::vector<T> elements) {
  Carrier<T> c;
  c.name = std::move(name);
  auto shared = std::make_shared<const std::vector<T>>(elements);
  c.contains = [shared](const T& v) {
    return std::find(shared->begin(), shared->end(), v) != shared->end();
  };
  c.draw = [shared](Rng& rng) { return (*shared)[below(rng, shared->size())]; };
  c.anchors = elements;
  c.elements = std::move(elements);
  return c;
}

}  // namespace mobi
