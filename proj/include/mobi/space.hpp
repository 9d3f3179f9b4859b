#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "mobi/algebra.hpp"

namespace mobi {

// Points with parametrized paths: q(x, a, y) is where a particle moving
// from x to y is at instant a.
template <class S, class P>
struct MobiSpace {
  using Scalar = S;
  using Point = P;

  std::string name;
  MobiAlgebra<S> algebra;
  Carrier<P> points;
  std::function<P(const P&, const S&, const P&)> q;
  Equality<P> eq;

  P operator()(const P& x, const S& a, const P& y) const { return q(x, a, y); }

  // q with membership checks on inputs (DomainError) .
  P at(const P& x, const S& a, const P& y) const {
    require(x);
    require(y);
    algebra.require(a);
    return q(x, a, y);
  }

  void require(const P& x) const {
    if (!points.has(x)) throw DomainError(json_text(x) + " is not in " + points.name);
  }
};

template <class S, class P>
std::vector<LawReport> check_space(const MobiSpace<S, P>& sp, const SampleStrategy& s) {
  const auto& X = sp.points;
  const auto& A = sp.algebra.carrier;
  const auto q = closed(X, sp.q);
  const auto p = closed(A, sp.algebra.p);
  const S &zero = sp.algebra.zero, &half = sp.algebra.half, &one = sp.algebra.one;
  const auto& eq = sp.eq;
  std::vector<LawReport> out;

  auto pairs = sample_tuples(s, "X1", X, X);
  out.push_back(run_law<P>("X1.start", pairs, {"x", "y"}, eq, s,
                           [&](const P& x, const P& y) -> Outcome<P> { return equation(q(x, zero, y), x); }));
  out.push_back(run_law<P>("X2.end", pairs, {"x", "y"}, eq, s,
                           [&](const P& x, const P& y) -> Outcome<P> { return equation(q(x, one, y), y); }));

  auto point_instant = sample_tuples(s, "X3", X, A);
  out.push_back(run_law<P>("X3.idempotency", point_instant, {"x", "a"}, eq, s,
                           [&](const P& x, const S& a) -> Outcome<P> { return equation(q(x, a, x), x); }));

  auto triples = sample_tuples(s, "X4", X, X, X);
  out.push_back(run_law<P>("X4.cancellation", triples, {"x", "y1", "y2"}, eq, s,
                           [&](const P& x, const P& y1, const P& y2) -> Outcome<P> {
                             if (!eq.separated(y1, y2, s.separation)) return std::nullopt;
                             return distinction(q(x, half, y1), q(x, half, y2));
                           }));

  auto homo = sample_tuples(s, "X5", X, X, A, A, A);
  out.push_back(run_law<P>("X5.homomorphism", homo, {"x", "y", "a", "b", "c"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b, const S& c) -> Outcome<P> {
                             return equation(q(q(x, a, y), b, q(x, c, y)), q(x, p(a, b, c), y));
                           }));
  return out;
}

// Consequences of the space axioms. The two implications are checked on
// tuples built to satisfy their premises plus any sampled tuple that does.
template <class S, class P>
std::vector<LawReport> check_space_properties(const MobiSpace<S, P>& sp, const SampleStrategy& s) {
  const auto& X = sp.points;
  const auto& A = sp.algebra.carrier;
  const auto q = closed(X, sp.q);
  const auto p = closed(A, sp.algebra.p);
  const S &zero = sp.algebra.zero, &half = sp.algebra.half, &one = sp.algebra.one;
  const auto& eq = sp.eq;
  auto bar = [&](const S& a) { return p(one, a, zero); };
  auto mul = [&](const S& a, const S& b) { return p(zero, a, b); };
  auto mid = [&](const S& a, const S& b) { return p(a, half, b); };
  auto cir = [&](const S& a, const S& b) { return p(a, b, one); };
  std::vector<LawReport> out;

  auto xya = sample_tuples(s, "Y1", X, X, A);
  out.push_back(run_law<P>("Y1.reversal", xya, {"x", "y", "a"}, eq, s,
                           [&](const P& x, const P& y, const S& a) -> Outcome<P> {
                             return equation(q(y, a, x), q(x, bar(a), y));
                           }));
  out.push_back(run_law<P>("Y2.midpoint_symmetry", xya, {"x", "y", "a"}, eq, s,
                           [&](const P& x, const P& y, const S&) -> Outcome<P> {
                             return equation(q(y, half, x), q(x, half, y));
                           }));

  auto xyab = sample_tuples(s, "Y3", X, X, A, A);
  out.push_back(run_law<P>("Y3.nested_start", xyab, {"x", "y", "a", "b"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b) -> Outcome<P> {
                             return equation(q(x, a, q(x, b, y)), q(x, mul(a, b), y));
                           }));
  out.push_back(run_law<P>("Y4.nested_end", xyab, {"x", "y", "a", "b"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b) -> Outcome<P> {
                             return equation(q(q(x, a, y), b, y), q(x, cir(a, b), y));
                           }));
  out.push_back(run_law<P>("Y5.midpoint_of_instants", xyab, {"x", "y", "a", "b"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b) -> Outcome<P> {
                             return equation(q(q(x, a, y), half, q(x, b, y)), q(x, mid(a, b), y));
                           }));
  out.push_back(run_law<P>("Y6.half_commutes", xya, {"x", "y", "a"}, eq, s,
                           [&](const P& x, const P& y, const S& a) -> Outcome<P> {
                             return equation(q(x, half, q(x, a, y)), q(x, a, q(x, half, y)));
                           }));
  out.push_back(run_law<P>("Y7.opposite_travellers_midpoint", xya, {"x", "y", "a"}, eq, s,
                           [&](const P& x, const P& y, const S& a) -> Outcome<P> {
                             return equation(q(q(x, a, y), half, q(y, a, x)), q(x, half, y));
                           }));

  auto xyabc = sample_tuples(s, "Y8", X, X, A, A, A);
  out.push_back(run_law<P>("Y8.half_expansion", xyabc, {"x", "y", "a", "b", "c"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b, const S& c) -> Outcome<P> {
                             return equation(q(q(q(x, a, y), b, x), half, q(x, b, q(x, c, y))),
                                             q(x, half, q(x, p(a, b, c), y)));
                           }));

  // Premise q(x,a,y) = q(y,a,x): holds by construction at a = 1/2 and at x = y.
  std::vector<std::tuple<P, P, S>> meeting;
  for (const auto& [x, y, a] : xya) {
    meeting.emplace_back(x, y, half);
    meeting.emplace_back(x, x, a);
    meeting.emplace_back(x, y, a);
  }
  out.push_back(run_law<P>("Y9.meeting_point", meeting, {"x", "y", "a"}, eq, s,
                           [&](const P& x, const P& y, const S& a) -> Outcome<P> {
                             const P forward = q(x, a, y);
                             if (!eq.equal(forward, q(y, a, x))) return std::nullopt;
                             return equation(forward, q(x, half, y));
                           }));

  // Premise q(x,a,y) = q(x,b,y): holds by construction at a = b and at x = y.
  auto xyabt = sample_tuples(s, "Y10", X, X, A, A, A);
  std::vector<std::tuple<P, P, S, S, S>> resting;
  for (const auto& [x, y, a, b, t] : xyabt) {
    resting.emplace_back(x, y, a, a, t);
    resting.emplace_back(x, x, a, b, t);
    resting.emplace_back(x, y, a, b, t);
  }
  out.push_back(run_law<P>("Y10.resting_interval", resting, {"x", "y", "a", "b", "t"}, eq, s,
                           [&](const P& x, const P& y, const S& a, const S& b, const S& t) -> Outcome<P> {
                             const P at_a = q(x, a, y);
                             if (!eq.equal(at_a, q(x, b, y))) return std::nullopt;
                             return equation(q(x, p(a, t, b), y), at_a);
                           }));
  return out;
}

// Interchange of q at instant a with the midpoint operation.
template <class S, class P>
LawReport check_affine(const MobiSpace<S, P>& sp, const SampleStrategy& s) {
  const auto& X = sp.points;
  const auto q = closed(X, sp.q);
  const S& half = sp.algebra.half;
  auto tuples = sample_tuples(s, "affine", X, X, X, X, sp.algebra.carrier);
  return run_law<P>("affine.midpoint_interchange", tuples, {"x1", "x2", "y1", "y2", "a"}, sp.eq, s,
                    [&](const P& x1, const P& x2, const P& y1, const P& y2, const S& a) -> Outcome<P> {
                      return equation(q(q(x1, a, y1), half, q(x2, a, y2)),
                                      q(q(x1, half, x2), a, q(y1, half, y2)));
                    });
}

// Both sides of the midpoint interchange at one tuple, for reporting witnesses.
template <class S, class P>
std::pair<P, P> affine_sides(const MobiSpace<S, P>& sp, const P& x1, const P& x2, const P& y1,
                             const P& y2, const S& a) {
  const S& half = sp.algebra.half;
  return {sp.at(sp.at(x1, a, y1), half, sp.at(x2, a, y2)),
          sp.at(sp.at(x1, half, x2), a, sp.at(y1, half, y2))};
}

// Interchange at two arbitrary instants; the midpoint version is its b = 1/2 case.
template <class S, class P>
LawReport check_strong_affine(const MobiSpace<S, P>& sp, const SampleStrategy& s) {
  const auto& X = sp.points;
  const auto& A = sp.algebra.carrier;
  const auto q = closed(X, sp.q);
  auto tuples = sample_tuples(s, "strong-affine", X, X, X, X, A, A);
  return run_law<P>("affine.strong_interchange", tuples, {"x1", "x2", "y1", "y2", "a", "b"}, sp.eq, s,
                    [&](const P& x1, const P& x2, const P& y1, const P& y2, const S& a,
                        const S& b) -> Outcome<P> {
                      return equation(q(q(x1, a, y1), b, q(x2, a, y2)), q(q(x1, b, x2), a, q(y1, b, y2)));
                    });
}

// Searches for a != b and x != y with q(x,a,y) = q(x,b,y). Not an axiom:
// a failing report only records that such witnesses exist.
template <class S, class P>
LawReport check_injectivity_conjecture(const MobiSpace<S, P>& sp, const SampleStrategy& s) {
  const auto& X = sp.points;
  const auto& A = sp.algebra.carrier;
  const auto q = closed(X, sp.q);
  const auto& aeq = sp.algebra.eq;
  auto tuples = sample_tuples(s, "injectivity", X, X, A, A);
  return run_law<P>("diagnostic.injectivity", tuples, {"x", "y", "a", "b"}, sp.eq, s,
                    [&](const P& x, const P& y, const S& a, const S& b) -> Outcome<P> {
                      if (!aeq.separated(a, b, s.separation) || !sp.eq.separated(x, y, s.separation))
                        return std::nullopt;
                      return distinction(q(x, a, y), q(x, b, y));
                    });
}

}  // namespace mobi
