#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mobi/instances/spaces.hpp"

namespace mobi {

// (M, +, e, phi) over a ring with 1/2.
template <class R, class M>
struct RingModule {
  std::string name;
  Ring<R> ring;
  Carrier<M> carrier;
  std::function<M(const M&, const M&)> add;
  std::function<M(const M&)> neg;
  M e;
  std::function<M(const R&, const M&)> phi;
  Equality<M> eq;
};

// Same shape; addition need not be associative.
template <class R, class M>
struct PseudoModule : RingModule<R, M> {};

// The ring operations recovered from a mobility algebra that contains 2:
// a + b = p(0, 2, p(a, 1/2, b)), ab = p(0, a, b), -a = p(0, p(1, 2, 0), a).
template <class S>
Ring<S> ring_from_algebra(const MobiAlgebra<S>& alg) {
  if (!alg.two) throw ConstructionError(alg.name + " has no element 2");
  Ring<S> r;
  r.name = alg.name;
  r.carrier = alg.carrier;
  r.zero = alg.zero;
  r.one = alg.one;
  r.half = alg.half;
  const auto p = alg.p;
  const S zero = alg.zero, half = alg.half, one = alg.one, two = *alg.two;
  r.add = [p, zero, half, two](const S& a, const S& b) { return p(zero, two, p(a, half, b)); };
  r.mul = [p, zero](const S& a, const S& b) { return p(zero, a, b); };
  r.neg = [p, zero, one, two](const S& a) { return p(zero, p(one, two, zero), a); };
  r.eq = alg.eq;
  return r;
}

// q(x, a, y) = phi_{1-a}(x) + phi_a(y) over the ring's mobility algebra.
template <class R, class M>
MobiSpace<R, M> space_from_module(const RingModule<R, M>& m) {
  if (!m.ring.half) throw ConstructionError(m.name + ": ring has no inverse of 1+1");
  MobiSpace<R, M> sp;
  sp.name = "space-of:" + m.name;
  sp.algebra = ring_algebra(m.ring);
  sp.points = m.carrier;
  const auto ring = m.ring;
  const auto add = m.add;
  const auto phi = m.phi;
  sp.q = [ring, add, phi](const M& x, const R& a, const M& y) { return add(phi(ring.sub(ring.one, a), x), phi(a, y)); };
  sp.eq = m.eq;
  return sp;
}

// x + y = q(e, 2, q(x, 1/2, y)), phi_a(x) = q(e, a, x), -x = q(e, p(1, 2, 0), x),
// without checking that the space is affine.
template <class S, class P>
PseudoModule<S, P> extract_pseudo_module(const MobiSpace<S, P>& sp, const P& e) {
  const auto& alg = sp.algebra;
  if (!alg.two) throw ConstructionError(alg.name + " has no element 2");
  sp.require(e);
  PseudoModule<S, P> m;
  m.name = "module-of:" + sp.name;
  m.ring = ring_from_algebra(alg);
  m.carrier = sp.points;
  const auto q = sp.q;
  const S half = alg.half, two = *alg.two;
  const S minus_one = alg.p(alg.one, two, alg.zero);
  m.add = [q, e, half, two](const P& x, const P& y) { return q(e, two, q(x, half, y)); };
  m.neg = [q, e, minus_one](const P& x) { return q(e, minus_one, x); };
  m.e = e;
  m.phi = [q, e](const S& a, const P& x) { return q(e, a, x); };
  m.eq = sp.eq;
  return m;
}

// Refuses non-affine spaces with RefusedConversion carrying the failing report.
template <class S, class P>
RingModule<S, P> module_from_space(const MobiSpace<S, P>& sp, const P& e, const SampleStrategy& s = {}) {
  if (!sp.algebra.two) throw ConstructionError(sp.algebra.name + " has no element 2");
  const LawReport affine = check_affine(sp, s);
  if (!affine.passed()) throw RefusedConversion(sp.name + " is not affine", to_json(affine));
  return extract_pseudo_module(sp, e);
}

// Module laws, each reported independently under `prefix`.
template <class R, class M>
std::vector<LawReport> check_module_laws(const RingModule<R, M>& m, const SampleStrategy& s,
                                         const std::string& prefix = "bridge.module.") {
  const auto& X = m.carrier;
  const auto& A = m.ring.carrier;
  const auto add = closed(X, m.add);
  const auto neg = closed(X, m.neg);
  const auto phi = closed(X, m.phi);
  const auto& ring = m.ring;
  const auto& eq = m.eq;
  std::vector<LawReport> out;

  auto xy = sample_tuples(s, "module-pairs", X, X);
  out.push_back(run_law<M>(prefix + "commutativity", xy, {"x", "y"}, eq, s,
                           [&](const M& x, const M& y) -> Outcome<M> { return equation(add(x, y), add(y, x)); }));
  auto x1 = sample_tuples(s, "module-single", X);
  out.push_back(run_law<M>(prefix + "identity", x1, {"x"}, eq, s,
                           [&](const M& x) -> Outcome<M> { return equation(add(x, m.e), x); }));
  out.push_back(run_law<M>(prefix + "inverses", x1, {"x"}, eq, s,
                           [&](const M& x) -> Outcome<M> { return equation(add(x, neg(x)), m.e); }));
  auto xyz = sample_tuples(s, "module-triples", X, X, X);
  out.push_back(run_law<M>(prefix + "associativity", xyz, {"x", "y", "z"}, eq, s,
                           [&](const M& x, const M& y, const M& z) -> Outcome<M> {
                             return equation(add(add(x, y), z), add(x, add(y, z)));
                           }));
  auto axy = sample_tuples(s, "module-action", A, X, X);
  out.push_back(run_law<M>(prefix + "phi_additive", axy, {"a", "x", "y"}, eq, s,
                           [&](const R& a, const M& x, const M& y) -> Outcome<M> {
                             return equation(phi(a, add(x, y)), add(phi(a, x), phi(a, y)));
                           }));
  auto abx = sample_tuples(s, "module-scalars", A, A, X);
  out.push_back(run_law<M>(prefix + "phi_sum", abx, {"a", "b", "x"}, eq, s,
                           [&](const R& a, const R& b, const M& x) -> Outcome<M> {
                             return equation(phi(ring.add(a, b), x), add(phi(a, x), phi(b, x)));
                           }));
  out.push_back(run_law<M>(prefix + "phi_product", abx, {"a", "b", "x"}, eq, s,
                           [&](const R& a, const R& b, const M& x) -> Outcome<M> {
                             return equation(phi(ring.mul(a, b), x), phi(a, phi(b, x)));
                           }));
  out.push_back(run_law<M>(prefix + "phi_one", x1, {"x"}, eq, s,
                           [&](const M& x) -> Outcome<M> { return equation(phi(ring.one, x), x); }));
  out.push_back(run_law<M>(prefix + "phi_zero", x1, {"x"}, eq, s,
                           [&](const M& x) -> Outcome<M> { return equation(phi(ring.zero, x), m.e); }));
  return out;
}

// The module laws plus whether q(x,a,y) = phi_{1-a}(x) + phi_a(y) satisfies X5.
template <class R, class M>
std::vector<LawReport> check_pseudo_module_laws(const PseudoModule<R, M>& pm, const SampleStrategy& s) {
  auto out = check_module_laws<R, M>(pm, s, "bridge.pseudo.");
  const auto rebuilt = space_from_module<R, M>(pm);
  for (auto& r : check_space(rebuilt, s)) {
    if (r.law == "X5.homomorphism") {
      r.law = "bridge.pseudo.reconstruction_X5";
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Module -> space -> module: addition and action agree pointwise.
template <class R, class M>
LawReport roundtrip_module(const RingModule<R, M>& m, const SampleStrategy& s) {
  const auto sp = space_from_module(m);
  const auto back = module_from_space(sp, m.e, s);
  auto xy = sample_tuples(s, "roundtrip-add", m.carrier, m.carrier);
  auto ax = sample_tuples(s, "roundtrip-phi", m.ring.carrier, m.carrier);
  auto x1 = sample_tuples(s, "roundtrip-neg", m.carrier);
  return merge_reports(
      "bridge.roundtrip_module",
      {run_law<M>("add", xy, {"x", "y"}, m.eq, s,
                  [&](const M& x, const M& y) -> Outcome<M> { return equation(back.add(x, y), m.add(x, y)); }),
       run_law<M>("phi", ax, {"a", "x"}, m.eq, s,
                  [&](const R& a, const M& x) -> Outcome<M> { return equation(back.phi(a, x), m.phi(a, x)); }),
       run_law<M>("neg", x1, {"x"}, m.eq, s,
                  [&](const M& x) -> Outcome<M> { return equation(back.neg(x), m.neg(x)); })},
      s.max_witnesses);
}

// Space -> module -> space: q agrees pointwise.
template <class S, class P>
LawReport roundtrip_space(const MobiSpace<S, P>& sp, const P& e, const SampleStrategy& s) {
  const auto m = module_from_space(sp, e, s);
  const auto back = space_from_module<S, P>(m);
  auto tuples = sample_tuples(s, "roundtrip-q", sp.points, sp.algebra.carrier, sp.points);
  return run_law<P>("bridge.roundtrip_space", tuples, {"x", "a", "y"}, sp.eq, s,
                    [&](const P& x, const S& a, const P& y) -> Outcome<P> {
                      return equation(back.q(x, a, y), sp.q(x, a, y));
                    });
}

// q(e, 1/2, x + y) = q(x, 1/2, y) for the extracted addition.
template <class S, class P>
LawReport check_midpoint_pivot(const MobiSpace<S, P>& sp, const RingModule<S, P>& m, const SampleStrategy& s) {
  auto xy = sample_tuples(s, "pivot", sp.points, sp.points);
  const S& half = sp.algebra.half;
  return run_law<P>("bridge.midpoint_pivot", xy, {"x", "y"}, sp.eq, s,
                    [&](const P& x, const P& y) -> Outcome<P> {
                      return equation(sp.q(m.e, half, m.add(x, y)), sp.q(x, half, y));
                    });
}

// Q^n (or R^n) with the usual vector operations.
template <class S>
RingModule<S, Vec<S>> vector_module(int n) {
  const auto sp = euclidean_space<S>(n);
  RingModule<S, Vec<S>> m;
  m.name = "vectors:" + std::to_string(n);
  m.ring = number_ring<S>();
  m.carrier = sp.points;
  m.add = [](const Vec<S>& x, const Vec<S>& y) {
    Vec<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
  };
  m.neg = [](const Vec<S>& x) {
    Vec<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
    return out;
  };
  m.e = Vec<S>(static_cast<std::size_t>(n), ratio<S>(0));
  m.phi = [](const S& a, const Vec<S>& x) {
    Vec<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
  };
  m.eq = backend_equality<Vec<S>>();
  return m;
}

// x + y = (x1 + y1 - 2k x2 y2, x2 + y2), phi_a(x) = (a x1 + k(1-a)a x2^2, a x2).
template <class S>
RingModule<S, Vec<S>> projectile_module(const S& k) {
  RingModule<S, Vec<S>> m;
  m.name = "projectile-module";
  m.ring = number_ring<S>();
  m.carrier = plane_carrier<S>();
  m.add = [k](const Vec<S>& x, const Vec<S>& y) { return Vec<S>{x[0] + y[0] - 2 * k * x[1] * y[1], x[1] + y[1]}; };
  m.neg = [k](const Vec<S>& x) { return Vec<S>{-x[0] - 2 * k * x[1] * x[1], -x[1]}; };
  m.e = Vec<S>{ratio<S>(0), ratio<S>(0)};
  m.phi = [k](const S& a, const Vec<S>& x) { return Vec<S>{a * x[0] + k * (1 - a) * a * x[1] * x[1], a * x[1]}; };
  m.eq = backend_equality<Vec<S>>();
  return m;
}

// The generic-region formulas for the f = x^3 graph space at e = (0,0):
// x + y = (x1 + y1, ((x1^2 + 4x1y1 + 7y1^2)x2 + (7x1^2 + 4x1y1 + y1^2)y2) / (x1^2 + x1y1 + y1^2)),
// phi_a(x) = (a x1, a^3 x2). Valid when x1, y1 and x1 + y1 are nonzero.
template <class S>
Vec<S> cube_pseudo_add(const Vec<S>& x, const Vec<S>& y) {
  const S &x1 = x[0], &x2 = x[1], &y1 = y[0], &y2 = y[1];
  const S den = x1 * x1 + x1 * y1 + y1 * y1;
  if (den == 0) throw DomainError("cube pseudo-module formula needs (x1, y1) != (0, 0)");
  return {x1 + y1, ((x1 * x1 + 4 * x1 * y1 + 7 * y1 * y1) * x2 + (7 * x1 * x1 + 4 * x1 * y1 + y1 * y1) * y2) / den};
}

template <class S>
Vec<S> cube_pseudo_phi(const S& a, const Vec<S>& x) {
  return {a * x[0], a * a * a * x[1]};
}

// Graph space f = x^3 over the whole line, sampled where x1 > 0 (the
// region where the extracted operations avoid the x1 = y1 branch).
template <class S>
MobiSpace<S, Vec<S>> cube_space_for_bridge() {
  using detail::vec;
  auto sp = graph_cube_space<S>(line_algebra<S>());
  sp.points.draw = [](Rng& rng) {
    return Vec<S>{random_scalar<S>(rng, Rational(1, 8), 3, 16), random_scalar<S>(rng, -3, 3, 16)};
  };
  sp.points.anchors = {vec<S>({{1, 1}, {0, 1}}), vec<S>({{1, 1}, {1, 1}}), vec<S>({{2, 1}, {-1, 1}}),
                       vec<S>({{1, 2}, {2, 1}})};
  return sp;
}

}  // namespace mobi
