#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mobi/instances/algebras.hpp"
#include "mobi/space.hpp"

namespace mobi {

template <class S>
using Vec = std::vector<S>;

namespace detail {

template <class S>
bool finite_scalar(const S& v) {
  if constexpr (is_exact_scalar<S>) {
    (void)v;
    return true;
  } else {
    return std::isfinite(v);
  }
}

// Coordinates drawn independently from [lo_i, hi_i].
template <class S>
Carrier<Vec<S>> box_carrier(std::string name, std::vector<std::pair<Rational, Rational>> box,
                            std::function<bool(const Vec<S>&)> extra, std::vector<Vec<S>> anchors) {
  Carrier<Vec<S>> c;
  c.name = std::move(name);
  const std::size_t n = box.size();
  c.contains = [n, extra](const Vec<S>& x) {
    if (x.size() != n) return false;
    for (const auto& v : x)
      if (!finite_scalar(v)) return false;
    return !extra || extra(x);
  };
  c.draw = [box](Rng& rng) {
    Vec<S> x;
    for (const auto& [lo, hi] : box) x.push_back(random_scalar<S>(rng, lo, hi, 16));
    return x;
  };
  c.anchors = std::move(anchors);
  return c;
}

template <class S>
Vec<S> vec(std::initializer_list<std::pair<long, long>> coords) {
  Vec<S> v;
  for (const auto& [num, den] : coords) v.push_back(ratio<S>(num, den));
  return v;
}

}  // namespace detail

// R^n with q(x,t,y) = (1-t)x + ty, by default over the unit interval.
template <class S>
MobiSpace<S, Vec<S>> euclidean_space(int n, MobiAlgebra<S> alg = interval_algebra<S>()) {
  if (n < 1) throw DomainError("euclidean space needs dimension >= 1");
  MobiSpace<S, Vec<S>> sp;
  sp.name = "euclidean:" + std::to_string(n);
  sp.algebra = std::move(alg);
  std::vector<Vec<S>> anchors;
  const auto un = static_cast<std::size_t>(n);
  anchors.push_back(Vec<S>(un, ratio<S>(0)));
  anchors.push_back(Vec<S>(un, ratio<S>(1)));
  Vec<S> e1(un, ratio<S>(0));
  e1[0] = ratio<S>(1);
  anchors.push_back(e1);
  Vec<S> alt;
  for (int i = 0; i < n; ++i) alt.push_back(i % 2 == 0 ? ratio<S>(-2) : ratio<S>(1, 2));
  anchors.push_back(alt);
  sp.points = detail::box_carrier<S>("R^" + std::to_string(n), std::vector<std::pair<Rational, Rational>>(un, {-4, 4}),
                                     {}, anchors);
  sp.q = [](const Vec<S>& x, const S& t, const Vec<S>& y) {
    Vec<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (1 - t) * x[i] + t * y[i];
    return out;
  };
  sp.eq = backend_equality<Vec<S>>();
  return sp;
}

// One-dimensional space q(x,t,y) = F^-1((1-t)F(x) + tF(y)); the inverse is supplied.
template <class S>
MobiSpace<S, S> f_transform_space(std::string name, std::function<S(const S&)> F, std::function<S(const S&)> F_inverse,
                                  Carrier<S> domain) {
  MobiSpace<S, S> sp;
  sp.name = std::move(name);
  sp.algebra = interval_algebra<S>();
  sp.points = std::move(domain);
  auto contains = sp.points.contains;
  std::string dname = sp.points.name;
  sp.q = [F, F_inverse, contains, dname](const S& x, const S& t, const S& y) {
    if (contains && (!contains(x) || !contains(y))) throw DomainError("f-transform evaluated outside " + dname);
    return F_inverse((1 - t) * F(x) + t * F(y));
  };
  sp.eq = backend_equality<S>();
  return sp;
}

// (0, inf) with anchors, the domain of the log and reciprocal transforms.
template <class S>
Carrier<S> positive_reals() {
  Carrier<S> c;
  c.name = "(0,inf)";
  c.contains = [](const S& x) { return detail::finite_scalar(x) && x > 0; };
  c.draw = [](Rng& rng) { return random_scalar<S>(rng, Rational(1, 16), 4, 16); };
  c.anchors = {ratio<S>(1), ratio<S>(1, 2), ratio<S>(3), ratio<S>(4)};
  return c;
}

inline MobiSpace<double, double> log_transform_space() {
  return f_transform_space<double>(
      "ftransform:log", [](const double& x) { return std::log(x); }, [](const double& u) { return std::exp(u); },
      positive_reals<double>());
}

template <class S>
MobiSpace<S, S> reciprocal_transform_space() {
  return f_transform_space<S>(
      "ftransform:inverse", [](const S& x) -> S { return 1 / x; },
      [](const S& u) -> S {
        if (u == 0) throw DomainError("reciprocal transform: 1/0");
        return 1 / u;
      },
      positive_reals<S>());
}

template <class S>
MobiSpace<S, S> identity_transform_space() {
  Carrier<S> line;
  line.name = "R";
  line.contains = [](const S& x) { return detail::finite_scalar(x); };
  line.draw = [](Rng& rng) { return random_scalar<S>(rng, -4, 4, 16); };
  line.anchors = {ratio<S>(0), ratio<S>(1), ratio<S>(-2), ratio<S>(1, 2)};
  return f_transform_space<S>(
      "ftransform:identity", [](const S& x) { return x; }, [](const S& u) { return u; }, line);
}

// Plane paths that move linearly in the first coordinate and follow the
// graph of f in the second:
//   q = (x1 + (y1-x1)t, x2 + (y2-x2)(f(x1 + (y1-x1)t) - f(x1)) / (f(y1) - f(x1)))   if x1 != y1
//   q = (x1, (1-t)x2 + ty2)                                                         if x1 == y1
template <class S>
MobiSpace<S, Vec<S>> graph_family_space(std::string name, std::function<S(const S&)> f, Carrier<Vec<S>> domain,
                                        MobiAlgebra<S> alg = interval_algebra<S>()) {
  MobiSpace<S, Vec<S>> sp;
  sp.name = std::move(name);
  sp.algebra = std::move(alg);
  sp.points = std::move(domain);
  sp.q = [f](const Vec<S>& x, const S& t, const Vec<S>& y) -> Vec<S> {
    if (x[0] == y[0]) return {x[0], (1 - t) * x[1] + t * y[1]};
    const S first = x[0] + (y[0] - x[0]) * t;
    const S fx = f(x[0]);
    const S denom = f(y[0]) - fx;
    if (denom == 0) throw DomainError("graph family: f(y1) = f(x1) with x1 != y1");
    return {first, x[1] + (y[1] - x[1]) * (f(first) - fx) / denom};
  };
  sp.eq = backend_equality<Vec<S>>();
  return sp;
}

// Domain for f = 1/x and f = x^2: first coordinate strictly positive.
template <class S>
Carrier<Vec<S>> right_half_plane() {
  using detail::vec;
  return detail::box_carrier<S>(
      "(0,inf)xR", {{Rational(1, 8), 3}, {-3, 3}}, [](const Vec<S>& x) { return x[0] > 0; },
      {vec<S>({{1, 1}, {0, 1}}), vec<S>({{2, 1}, {1, 1}}), vec<S>({{1, 2}, {-1, 1}}), vec<S>({{1, 1}, {1, 1}})});
}

template <class S>
MobiSpace<S, Vec<S>> graph_inverse_space() {
  return graph_family_space<S>("graph:f=inverse", [](const S& v) -> S { return 1 / v; }, right_half_plane<S>());
}

template <class S>
MobiSpace<S, Vec<S>> graph_square_space() {
  return graph_family_space<S>("graph:f=square", [](const S& v) -> S { return v * v; }, right_half_plane<S>());
}

template <class S>
MobiSpace<S, Vec<S>> graph_cube_space(MobiAlgebra<S> alg = interval_algebra<S>()) {
  using detail::vec;
  auto plane = detail::box_carrier<S>("R^2", {{-3, 3}, {-3, 3}}, {},
                                      {vec<S>({{0, 1}, {0, 1}}), vec<S>({{1, 1}, {0, 1}}), vec<S>({{1, 1}, {1, 1}}),
                                       vec<S>({{0, 1}, {1, 1}}), vec<S>({{-1, 1}, {2, 1}})});
  return graph_family_space<S>("graph:f=cube", [](const S& v) -> S { return v * v * v; }, plane, std::move(alg));
}

// Cylinder charts. Angles are stored in units of pi.
enum class CylinderChart { symmetric, positive };  // (-pi, pi] and [0, 2pi)

template <class S>
bool in_chart(CylinderChart chart, const S& angle) {
  if (chart == CylinderChart::symmetric) return angle > -1 && angle <= 1;
  return angle >= 0 && angle < 2;
}

template <class S>
MobiSpace<S, Vec<S>> cylinder_chart_space(CylinderChart chart) {
  using detail::vec;
  MobiSpace<S, Vec<S>> sp;
  const bool sym = chart == CylinderChart::symmetric;
  sp.name = sym ? "cylinder:chart=symmetric" : "cylinder:chart=positive";
  sp.algebra = interval_algebra<S>();
  sp.points.name = sym ? "(-pi,pi]xR" : "[0,2pi)xR";
  sp.points.contains = [chart](const Vec<S>& x) {
    return x.size() == 2 && detail::finite_scalar(x[0]) && detail::finite_scalar(x[1]) && in_chart(chart, x[0]);
  };
  sp.points.draw = [sym](Rng& rng) {
    S angle;
    if (sym) {
      angle = random_scalar<S>(rng, -1, 1, 16);
      if (angle == -1) angle = ratio<S>(1);
    } else {
      angle = random_scalar<S>(rng, 0, 2, 16);
      if (angle == 2) angle = ratio<S>(0);
    }
    return Vec<S>{angle, random_scalar<S>(rng, -3, 3, 16)};
  };
  if (sym)
    sp.points.anchors = {vec<S>({{0, 1}, {0, 1}}), vec<S>({{1, 1}, {0, 1}}), vec<S>({{-1, 4}, {0, 1}}),
                         vec<S>({{1, 4}, {1, 1}}), vec<S>({{-3, 4}, {-1, 1}})};
  else
    sp.points.anchors = {vec<S>({{0, 1}, {0, 1}}), vec<S>({{7, 4}, {0, 1}}), vec<S>({{1, 4}, {0, 1}}),
                         vec<S>({{1, 1}, {1, 1}}), vec<S>({{3, 2}, {-1, 1}})};
  sp.q = [chart](const Vec<S>& x, const S& t, const Vec<S>& y) {
    if (!in_chart(chart, x[0]) || !in_chart(chart, y[0])) throw DomainError("angle outside chart");
    return Vec<S>{(1 - t) * x[0] + t * y[0], (1 - t) * x[1] + t * y[1]};
  };
  sp.eq = backend_equality<Vec<S>>();
  return sp;
}

template <class S>
Carrier<Vec<S>> plane_carrier() {
  using detail::vec;
  return detail::box_carrier<S>("R^2", {{-3, 3}, {-3, 3}}, {},
                                {vec<S>({{0, 1}, {0, 1}}), vec<S>({{0, 1}, {1, 1}}), vec<S>({{1, 1}, {1, 1}}),
                                 vec<S>({{-1, 1}, {2, 1}})});
}

// q = ((1-t)x1 + ty1 + k(y2-x2)^2(1-t)t, (1-t)x2 + ty2).
template <class S>
MobiSpace<S, Vec<S>> projectile_space(const S& k, MobiAlgebra<S> alg = interval_algebra<S>()) {
  MobiSpace<S, Vec<S>> sp;
  sp.name = "projectile";
  sp.algebra = std::move(alg);
  sp.points = plane_carrier<S>();
  sp.q = [k](const Vec<S>& x, const S& t, const Vec<S>& y) {
    const S d = y[1] - x[1];
    return Vec<S>{(1 - t) * x[0] + t * y[0] + k * d * d * (1 - t) * t, (1 - t) * x[1] + t * y[1]};
  };
  sp.eq = backend_equality<Vec<S>>();
  return sp;
}

// Critically damped oscillator, position in the first coordinate and time in the second:
// q = ((1-t)x1 e^{kt(x2-y2)} + t y1 e^{k(1-t)(y2-x2)}, (1-t)x2 + ty2).
inline MobiSpace<double, Vec<double>> oscillator_space(double k) {
  MobiSpace<double, Vec<double>> sp;
  sp.name = "oscillator";
  sp.algebra = interval_algebra<double>();
  sp.points = plane_carrier<double>();
  sp.q = [k](const Vec<double>& x, const double& t, const Vec<double>& y) {
    return Vec<double>{(1 - t) * x[0] * std::exp(k * t * (x[1] - y[1])) + t * y[0] * std::exp(k * (1 - t) * (y[1] - x[1])),
                       (1 - t) * x[1] + t * y[1]};
  };
  sp.eq = backend_equality<Vec<double>>();
  return sp;
}

template <class S>
Carrier<S> unit_interval_points() {
  Carrier<S> c;
  c.name = "[0,1]";
  c.contains = [](const S& x) { return x >= -boundary_slack<S>() && x <= 1 + boundary_slack<S>(); };
  c.draw = [](Rng& rng) { return random_scalar<S>(rng, 0, 1, 32); };
  c.anchors = {ratio<S>(0), ratio<S>(1, 4), ratio<S>(1, 2), ratio<S>(1)};
  return c;
}

// [0,1] over the lozenge algebra: q(x,(t,s),y) = (1-t-hs)x + (t+hs)y, h = +-1.
template <class S>
MobiSpace<LozengeScalar<S>, S> lozenge_space(int h) {
  if (h != 1 && h != -1) throw DomainError("lozenge space needs h = 1 or h = -1");
  MobiSpace<LozengeScalar<S>, S> sp;
  sp.name = h == 1 ? "lozenge-space:h=1" : "lozenge-space:h=-1";
  sp.algebra = lozenge_algebra<S>();
  sp.points = unit_interval_points<S>();
  sp.q = [h](const S& x, const LozengeScalar<S>& a, const S& y) {
    const S tau = a[0] + h * a[1];
    return (1 - tau) * x + tau * y;
  };
  sp.eq = backend_equality<S>();
  return sp;
}

// phi_{h,a}(x) = (a1 + h a2)x acting on the midpoint algebra [0,1] with base 0.
template <class S>
S lozenge_phi(const S& h, const LozengeScalar<S>& a, const S& x) {
  return (a[0] + h * a[1]) * x;
}

// The same space built from phi: q(x,a,y) is the z with 0 (+) z = phibar_a(x) (+) phi_a(y),
// where phibar_a(x) (+) phi_a(x) = 0 (+) x.
template <class S>
MobiSpace<LozengeScalar<S>, S> lozenge_space_from_phi(const S& h) {
  MobiSpace<LozengeScalar<S>, S> sp;
  sp.name = "lozenge-space:phi";
  sp.algebra = lozenge_algebra<S>();
  sp.points = unit_interval_points<S>();
  sp.q = [h](const S& x, const LozengeScalar<S>& a, const S& y) {
    auto mid = [](const S& u, const S& v) -> S { return (u + v) / 2; };
    const S phix = lozenge_phi(h, a, x);
    const S phibar_x = 2 * mid(0, x) - phix;  // solves b (+) phi(x) = 0 (+) x
    const S w = mid(phibar_x, lozenge_phi(h, a, y));
    return 2 * w;  // solves 0 (+) z = w
  };
  sp.eq = backend_equality<S>();
  return sp;
}

// Whether a -> phi_{h,a} sends p to the operation of End_0([0,1]):
// phi_{p(a,b,c)}(x) = (1 - beta) phi_a(x) + beta phi_c(x) with beta = b1 + h b2.
template <class S>
LawReport check_lozenge_phi_homomorphism(const S& h, const SampleStrategy& s) {
  const auto alg = lozenge_algebra<S>();
  const auto points = unit_interval_points<S>();
  using L = LozengeScalar<S>;
  auto tuples = sample_tuples(s, "lozenge-phi", alg.carrier, alg.carrier, alg.carrier, points);
  return run_law<S>("lozenge.phi_homomorphism", tuples, {"a", "b", "c", "x"}, backend_equality<S>(), s,
                    [&](const L& a, const L& b, const L& c, const S& x) -> Outcome<S> {
                      const S beta = b[0] + h * b[1];
                      return equation(lozenge_phi(h, alg.p(a, b, c), x),
                                      (1 - beta) * lozenge_phi(h, a, x) + beta * lozenge_phi(h, c, x));
                    });
}

template <class S>
Carrier<S> real_line_points() {
  Carrier<S> c;
  c.name = "R";
  c.contains = [](const S& x) { return detail::finite_scalar(x); };
  c.draw = [](Rng& rng) { return random_scalar<S>(rng, -3, 3, 16); };
  c.anchors = {ratio<S>(0), ratio<S>(1), ratio<S>(-1), ratio<S>(1, 2)};
  return c;
}

// q(x,t,y) = (1-t)x + ty + k(1-t)t: a projectile in R without the time coordinate.
template <class S>
MobiSpace<S, S> counterexample_1d_projectile(const S& k) {
  MobiSpace<S, S> sp;
  sp.name = "counterexample:projectile1d";
  sp.algebra = interval_algebra<S>();
  sp.points = real_line_points<S>();
  sp.q = [k](const S& x, const S& t, const S& y) { return (1 - t) * x + t * y + k * (1 - t) * t; };
  sp.eq = backend_equality<S>();
  return sp;
}

// q(x,t,y) = x + t^2(y - x).
template <class S>
MobiSpace<S, S> counterexample_tsquare() {
  MobiSpace<S, S> sp;
  sp.name = "counterexample:tsquare";
  sp.algebra = interval_algebra<S>();
  sp.points = real_line_points<S>();
  sp.q = [](const S& x, const S& t, const S& y) { return x + t * t * (y - x); };
  sp.eq = backend_equality<S>();
  return sp;
}

}  // namespace mobi
