#pragma once

#include <functional>
#include <array>
#include <limits>
#include <type_traits>
#include <vector>

#include "mobi/values.hpp"

namespace mobi {

enum class Comparison { exact, approximate };

// Equality discipline for a carrier. Exact compares canonical values;
// approximate accepts distance <= tolerance.
template <class T>
struct Equality {
  Comparison kind = Comparison::exact;
  double tolerance = 0.0;
  // Empty means value_distance.
  std::function<double(const T&, const T&)> metric;

  static Equality exact() { return {}; }
  static Equality approximate(double tol = 1e-9) { return {Comparison::approximate, tol, {}}; }

  double distance(const T& a, const T& b) const {
    return metric ? metric(a, b) : value_distance(a, b);
  }

  bool equal(const T& a, const T& b) const {
    if (kind == Comparison::exact) return a == b;
    const double d = distance(a, b);
    return d <= tolerance;  // NaN compares false
  }

  // Distinct enough to serve as a premise "a != b".
  bool separated(const T& a, const T& b, double separation) const {
    if (kind == Comparison::exact) return !(a == b);
    const double d = distance(a, b);
    return d >= separation && d > tolerance;
  }
};

// Whether values of T compare exactly by default (rationals, residues, maps
// and products of those).
template <class T>
struct exact_values : std::true_type {};
template <>
struct exact_values<double> : std::false_type {};
template <class T>
struct exact_values<std::vector<T>> : exact_values<T> {};
template <class T, std::size_t N>
struct exact_values<std::array<T, N>> : exact_values<T> {};

template <class S>
Equality<S> backend_equality(double tolerance = 1e-9) {
  if constexpr (exact_values<S>::value) {
    return Equality<S>::exact();
  } else {
    return Equality<S>::approximate(tolerance);
  }
}

template <class Target, class Source>
Equality<Target> rebind(const Equality<Source>& e) {
  return {e.kind, e.tolerance, {}};
}

}  // namespace mobi
