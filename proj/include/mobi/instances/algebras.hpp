#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "mobi/algebra.hpp"

namespace mobi {

// [0,1] with p(a,b,c) = a + bc - ba.
template <class S>
MobiAlgebra<S> interval_algebra() {
  MobiAlgebra<S> alg;
  alg.name = "interval";
  alg.carrier.name = "[0,1]";
  alg.carrier.contains = [](const S& a) { return a >= 0 && a <= 1; };
  alg.carrier.draw = [](Rng& rng) { return random_scalar<S>(rng, 0, 1, 64); };
  alg.carrier.anchors = {ratio<S>(0), ratio<S>(1, 4), ratio<S>(1, 2), ratio<S>(3, 4), ratio<S>(1)};
  alg.p = [](const S& a, const S& b, const S& c) -> S { return a + b * c - b * a; };
  alg.zero = ratio<S>(0);
  alg.half = ratio<S>(1, 2);
  alg.one = ratio<S>(1);
  alg.eq = backend_equality<S>();
  return alg;
}

// Unitary commutative ring presentation; `half` is the inverse of one + one.
template <class R>
struct Ring {
  std::string name;
  Carrier<R> carrier;
  R zero;
  R one;
  std::optional<R> half;
  std::function<R(const R&, const R&)> add;
  std::function<R(const R&, const R&)> mul;
  std::function<R(const R&)> neg;
  Equality<R> eq;

  R sub(const R& a, const R& b) const { return add(a, neg(b)); }
};

// The rationals (exact backend) or the reals (floating backend).
template <class S>
Ring<S> number_ring() {
  Ring<S> r;
  r.name = is_exact_scalar<S> ? "Q" : "R";
  r.carrier.name = r.name;
  r.carrier.contains = [](const S& a) {
    if constexpr (is_exact_scalar<S>) {
      (void)a;
      return true;
    } else {
      return std::isfinite(a);
    }
  };
  r.carrier.draw = [](Rng& rng) { return random_scalar<S>(rng, -3, 3, 16); };
  r.carrier.anchors = {ratio<S>(0), ratio<S>(1, 2), ratio<S>(1), ratio<S>(2), ratio<S>(-1), ratio<S>(1, 3)};
  r.zero = ratio<S>(0);
  r.one = ratio<S>(1);
  r.half = ratio<S>(1, 2);
  r.add = [](const S& a, const S& b) -> S { return a + b; };
  r.mul = [](const S& a, const S& b) -> S { return a * b; };
  r.neg = [](const S& a) -> S { return -a; };
  r.eq = backend_equality<S>();
  return r;
}

// Z_n; has a half exactly when n is odd.
Ring<ModInt> modular_ring(int n);

// Mobility algebra of a ring with one half: p(a,b,c) = a + bc - ba and two = 1 + 1.
template <class R>
MobiAlgebra<R> ring_algebra(const Ring<R>& ring) {
  if (!ring.half) throw ConstructionError(ring.name + " has no inverse of 1+1");
  const R two = ring.add(ring.one, ring.one);
  if (!ring.eq.equal(ring.mul(two, *ring.half), ring.one))
    throw ConstructionError(ring.name + ": designated half is not the inverse of 1+1");
  MobiAlgebra<R> alg;
  alg.name = "ring:" + ring.name;
  alg.carrier = ring.carrier;
  auto add = ring.add;
  auto mul = ring.mul;
  auto neg = ring.neg;
  alg.p = [add, mul, neg](const R& a, const R& b, const R& c) -> R {
    return add(add(a, mul(b, c)), neg(mul(b, a)));
  };
  alg.zero = ring.zero;
  alg.half = *ring.half;
  alg.one = ring.one;
  alg.two = two;
  alg.eq = ring.eq;
  return alg;
}

// The whole number line as a mobility algebra (contains 2).
template <class S>
MobiAlgebra<S> line_algebra() {
  auto alg = ring_algebra(number_ring<S>());
  alg.name = is_exact_scalar<S> ? "line:Q" : "line:R";
  return alg;
}

template <class S>
using LozengeScalar = std::array<S, 2>;

// {(t1,t2) : |t2| <= t1 <= 1 - |t2|} with the two-component operation
// p(a,b,c) = (a1 - b1a1 - b2a2 + b1c1 + b2c2, a2 - b1a2 - b2a1 + b1c2 + b2c1).
template <class S>
MobiAlgebra<LozengeScalar<S>> lozenge_algebra() {
  using L = LozengeScalar<S>;
  MobiAlgebra<L> alg;
  alg.name = "lozenge";
  alg.carrier.name = "lozenge";
  alg.carrier.contains = [](const L& a) {
    const S m = abs_value(a[1]), e = boundary_slack<S>();
    return m <= a[0] + e && a[0] <= 1 - m + e;
  };
  alg.carrier.draw = [](Rng& rng) {
    const S t1 = random_scalar<S>(rng, 0, 1, 32);
    if constexpr (is_exact_scalar<S>) {
      const Rational m = t1 < 1 - t1 ? t1 : Rational(1 - t1);
      return L{t1, random_scalar<S>(rng, -m, m, 32)};
    } else {
      const double m = std::min(t1, 1 - t1);
      return L{t1, -m + 2 * m * unit_double(rng)};
    }
  };
  alg.carrier.anchors = {L{ratio<S>(0), ratio<S>(0)}, L{ratio<S>(1, 2), ratio<S>(0)}, L{ratio<S>(1), ratio<S>(0)},
                         L{ratio<S>(1, 2), ratio<S>(1, 2)}, L{ratio<S>(1, 2), ratio<S>(-1, 2)}};
  alg.p = [](const L& a, const L& b, const L& c) -> L {
    return L{a[0] - b[0] * a[0] - b[1] * a[1] + b[0] * c[0] + b[1] * c[1],
             a[1] - b[0] * a[1] - b[1] * a[0] + b[0] * c[1] + b[1] * c[0]};
  };
  alg.zero = L{ratio<S>(0), ratio<S>(0)};
  alg.half = L{ratio<S>(1, 2), ratio<S>(0)};
  alg.one = L{ratio<S>(1), ratio<S>(0)};
  alg.eq = backend_equality<L>();
  return alg;
}

}  // namespace mobi
