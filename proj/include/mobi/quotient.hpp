#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mobi/instances/spaces.hpp"

namespace mobi {

// An identification space S of a covering space X: h : X -> S, a section
// s : S -> X and a lift theta : S x S -> X of the second point relative to the first.
// Both carriers use the point type P.
template <class S, class P>
struct QuotientData {
  std::string name;
  MobiSpace<S, P> base;
  Carrier<P> target;
  std::function<P(const P&)> h;
  std::function<P(const P&)> s;
  std::function<P(const P&, const P&)> theta;
  Equality<P> target_eq;
};

// q_S(u, a, v) = h(q(s(u), a, theta(u, v))), no precondition checks.
template <class S, class P>
P quotient_q(const QuotientData<S, P>& qd, const P& u, const S& a, const P& v) {
  return qd.h(qd.base.q(qd.s(u), a, qd.theta(u, v)));
}

template <class S, class P>
std::vector<LawReport> check_quotient_conditions(const QuotientData<S, P>& qd, const SampleStrategy& smp) {
  const auto& U = qd.target;
  const auto& A = qd.base.algebra.carrier;
  const auto& alg = qd.base.algebra;
  const auto h = closed(U, qd.h);
  const auto sec = closed(qd.base.points, qd.s);
  const auto theta = closed(qd.base.points, qd.theta);
  const auto q = closed(qd.base.points, qd.base.q);
  const auto& teq = qd.target_eq;
  auto hq = [&](const P& u, const S& a, const P& v) { return h(q(sec(u), a, theta(u, v))); };
  std::vector<LawReport> out;

  auto single = sample_tuples(smp, "quotient-section", U);
  out.push_back(run_law<P>("quotient.section", single, {"u"}, teq, smp,
                           [&](const P& u) -> Outcome<P> { return equation(h(sec(u)), u); }));

  auto pairs = sample_tuples(smp, "quotient-lift", U, U);
  out.push_back(run_law<P>("quotient.lift_endpoint", pairs, {"u", "v"}, teq, smp,
                           [&](const P& u, const P& v) -> Outcome<P> { return equation(h(theta(u, v)), v); }));
  out.push_back(run_law<P>("quotient.lift_diagonal", single, {"u"}, qd.base.eq, smp,
                           [&](const P& u) -> Outcome<P> { return equation(theta(u, u), sec(u)); }));

  auto triples = sample_tuples(smp, "quotient-cancel", U, U, U);
  out.push_back(run_law<P>("quotient.midpoint_cancellation", triples, {"u", "v1", "v2"}, teq, smp,
                           [&](const P& u, const P& v1, const P& v2) -> Outcome<P> {
                             if (!teq.separated(v1, v2, smp.separation)) return std::nullopt;
                             return distinction(hq(u, alg.half, v1), hq(u, alg.half, v2));
                           }));

  auto nested = sample_tuples(smp, "quotient-nested", U, U, A, A, A);
  out.push_back(run_law<P>(
      "quotient.nested_compatibility", nested, {"u", "v", "a1", "a2", "a3"}, teq, smp,
      [&](const P& u, const P& v, const S& a1, const S& a2, const S& a3) -> Outcome<P> {
        const P w1 = hq(u, a1, v);
        const P w3 = hq(u, a3, v);
        const P lhs = hq(u, alg.p(a1, a2, a3), v);
        const P rhs = hq(w1, a2, w3);
        return explained(equation(lhs, rhs), [=, &qd] {
          return "lift(u,v)=" + json_text(qd.theta(u, v)) + " w1=" + json_text(w1) + " w3=" + json_text(w3) +
                 " lift(w1,w3)=" + json_text(qd.theta(w1, w3)) + " p(a1,a2,a3)=" + json_text(qd.base.algebra.p(a1, a2, a3));
        });
      }));
  return out;
}

// The induced space on S. Throws ConstructionError (with the failing report)
// when a condition is violated on the samples.
template <class S, class P>
MobiSpace<S, P> quotient_space(const QuotientData<S, P>& qd, const SampleStrategy& smp = {}) {
  for (const auto& r : check_quotient_conditions(qd, smp))
    if (!r.passed()) throw ConstructionError(qd.name + ": quotient condition failed: " + to_json(r));
  MobiSpace<S, P> sp;
  sp.name = qd.name;
  sp.algebra = qd.base.algebra;
  sp.points = qd.target;
  sp.q = [qd](const P& u, const S& a, const P& v) { return quotient_q(qd, u, a, v); };
  sp.eq = qd.target_eq;
  return sp;
}

// Angle reduced into [0, 2) (units of pi).
template <class S>
S wrap_angle(const S& angle) {
  if constexpr (is_exact_scalar<S>) {
    return angle - 2 * floor_rational(angle / 2);
  } else {
    S r = std::fmod(angle, 2.0);
    if (r < 0) r += 2.0;
    if (r >= 2.0) r = 0.0;
    return r;
  }
}

enum class CylinderLift { shortest, none };

// The cylinder [0,2pi) x R under the plane: h reduces the angle, s is the
// inclusion, theta moves v by a full turn when the angular gap exceeds pi
// (|gap| = pi keeps v). Angles in units of pi.
template <class S>
QuotientData<S, Vec<S>> cylinder_quotient(CylinderLift lift = CylinderLift::shortest) {
  using detail::vec;
  QuotientData<S, Vec<S>> qd;
  qd.name = lift == CylinderLift::shortest ? "quotient:cylinder" : "quotient:cylinder-unlifted";
  qd.base = euclidean_space<S>(2);
  qd.base.points.name = "R^2";
  qd.target.name = "[0,2pi)xR";
  qd.target.contains = [](const Vec<S>& x) {
    return x.size() == 2 && detail::finite_scalar(x[0]) && detail::finite_scalar(x[1]) && x[0] >= 0 && x[0] < 2;
  };
  qd.target.draw = [](Rng& rng) {
    S angle = random_scalar<S>(rng, 0, 2, 16);
    if (angle == 2) angle = ratio<S>(0);
    return Vec<S>{angle, random_scalar<S>(rng, -3, 3, 16)};
  };
  qd.target.anchors = {vec<S>({{0, 1}, {0, 1}}), vec<S>({{7, 4}, {0, 1}}), vec<S>({{1, 4}, {0, 1}}),
                       vec<S>({{1, 1}, {1, 1}}), vec<S>({{3, 2}, {-1, 1}})};
  qd.h = [](const Vec<S>& x) { return Vec<S>{wrap_angle(x[0]), x[1]}; };
  qd.s = [](const Vec<S>& u) { return u; };
  if (lift == CylinderLift::shortest) {
    qd.theta = [](const Vec<S>& u, const Vec<S>& v) {
      const S gap = v[0] - u[0];
      if (gap < -1) return Vec<S>{v[0] + 2, v[1]};
      if (gap > 1) return Vec<S>{v[0] - 2, v[1]};
      return v;
    };
  } else {
    qd.theta = [](const Vec<S>&, const Vec<S>& v) { return v; };
  }
  qd.target_eq = backend_equality<Vec<S>>();
  return qd;
}

// |first(theta(u,v)) - first(s(u))| <= pi on samples (units of pi).
template <class S>
LawReport check_cylinder_shortest_path(const QuotientData<S, Vec<S>>& qd, const SampleStrategy& smp) {
  auto pairs = sample_tuples(smp, "quotient-shortest", qd.target, qd.target);
  return run_law<S>("quotient.shortest_path", pairs, {"u", "v"}, backend_equality<S>(), smp,
                    [&](const Vec<S>& u, const Vec<S>& v) -> Outcome<S> {
                      const S gap = abs_value(S(qd.theta(u, v)[0] - qd.s(u)[0]));
                      return equation(gap > 1 ? ratio<S>(1) : gap, gap);
                    });
}

}  // namespace mobi
