#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mobi/carrier.hpp"
#include "mobi/equality.hpp"
#include "mobi/law_engine.hpp"

namespace mobi {

// A ternary operation p with constants 0, 1/2, 1 over a carrier: the
// scalars ("instants") of mobility spaces.
template <class S>
struct MobiAlgebra {
  using Scalar = S;

  std::string name;
  Carrier<S> carrier;
  std::function<S(const S&, const S&, const S&)> p;
  S zero;
  S half;
  S one;
  // Inverse of half (p(0, half, two) = one) when the algebra has one.
  std::optional<S> two;
  Equality<S> eq;

  bool contains(const S& a) const { return carrier.has(a); }
  S operator()(const S& a, const S& b, const S& c) const { return p(a, b, c); }

  void require(const S& a) const {
    if (!contains(a)) throw DomainError(json_text(a) + " is not in " + carrier.name);
  }
};

template <class S>
S complement(const MobiAlgebra<S>& alg, const S& a) {
  alg.require(a);
  return alg.p(alg.one, a, alg.zero);
}

template <class S>
S dot(const MobiAlgebra<S>& alg, const S& a, const S& b) {
  alg.require(a);
  alg.require(b);
  return alg.p(alg.zero, a, b);
}

template <class S>
S oplus(const MobiAlgebra<S>& alg, const S& a, const S& b) {
  alg.require(a);
  alg.require(b);
  return alg.p(a, alg.half, b);
}

template <class S>
S circ(const MobiAlgebra<S>& alg, const S& a, const S& b) {
  alg.require(a);
  alg.require(b);
  return alg.p(a, b, alg.one);
}

// Verifies that the constants belong to the carrier; throws ConstructionError.
template <class S>
void validate_constants(const MobiAlgebra<S>& alg) {
  for (const S* c : {&alg.zero, &alg.half, &alg.one}) {
    if (!alg.contains(*c))
      throw ConstructionError(alg.name + ": constant " + json_text(*c) + " outside carrier");
  }
}

template <class S>
std::vector<LawReport> check_algebra(const MobiAlgebra<S>& alg, const SampleStrategy& s) {
  validate_constants(alg);
  const auto& A = alg.carrier;
  const auto p = closed(A, alg.p);
  const S &zero = alg.zero, &half = alg.half, &one = alg.one;
  const auto& eq = alg.eq;
  std::vector<LawReport> out;

  const std::vector<std::tuple<>> none{{}};
  out.push_back(run_law<S>("A1.half_complement", none, {}, eq, s,
                           [&]() -> Outcome<S> { return equation(p(one, half, zero), half); }));

  auto one_var = sample_tuples(s, "A2", A);
  out.push_back(run_law<S>("A2.unit_path", one_var, {"a"}, eq, s,
                           [&](const S& a) -> Outcome<S> { return equation(p(zero, a, one), a); }));

  auto two_var = sample_tuples(s, "A3", A, A);
  out.push_back(run_law<S>("A3.idempotency", two_var, {"a", "b"}, eq, s,
                           [&](const S& a, const S& b) -> Outcome<S> { return equation(p(a, b, a), a); }));
  out.push_back(run_law<S>("A4.zero_instant", two_var, {"a", "b"}, eq, s,
                           [&](const S& a, const S& b) -> Outcome<S> { return equation(p(a, zero, b), a); }));
  out.push_back(run_law<S>("A5.unit_instant", two_var, {"a", "b"}, eq, s,
                           [&](const S& a, const S& b) -> Outcome<S> { return equation(p(a, one, b), b); }));

  auto three_var = sample_tuples(s, "A6", A, A, A);
  out.push_back(run_law<S>("A6.cancellation", three_var, {"a", "b1", "b2"}, eq, s,
                           [&](const S& a, const S& b1, const S& b2) -> Outcome<S> {
                             if (!eq.separated(b1, b2, s.separation)) return std::nullopt;
                             return distinction(p(a, half, b1), p(a, half, b2));
                           }));

  auto five_var = sample_tuples(s, "A7", A, A, A, A, A);
  out.push_back(run_law<S>("A7.homomorphism", five_var, {"a", "b", "c1", "c2", "c3"}, eq, s,
                           [&](const S& a, const S& b, const S& c1, const S& c2, const S& c3) -> Outcome<S> {
                             return equation(p(a, p(c1, c2, c3), b), p(p(a, c1, b), c2, p(a, c3, b)));
                           }));

  auto medial = sample_tuples(s, "A8", A, A, A, A, A);
  out.push_back(run_law<S>("A8.mediality", medial, {"a1", "b1", "a2", "b2", "c"}, eq, s,
                           [&](const S& a1, const S& b1, const S& a2, const S& b2, const S& c) -> Outcome<S> {
                             return equation(p(p(a1, c, b1), half, p(a2, c, b2)),
                                             p(p(a1, half, a2), c, p(b1, half, b2)));
                           }));
  return out;
}

// The nine standard consequences of the axioms, stated with the derived
// operations complement, dot, oplus and circ.
template <class S>
std::vector<LawReport> check_derived(const MobiAlgebra<S>& alg, const SampleStrategy& s) {
  validate_constants(alg);
  const auto& A = alg.carrier;
  const auto p = closed(A, alg.p);
  const S &zero = alg.zero, &half = alg.half, &one = alg.one;
  const auto& eq = alg.eq;
  auto bar = [&](const S& a) { return p(one, a, zero); };
  auto mul = [&](const S& a, const S& b) { return p(zero, a, b); };
  auto mid = [&](const S& a, const S& b) { return p(a, half, b); };
  auto cir = [&](const S& a, const S& b) { return p(a, b, one); };
  std::vector<LawReport> out;

  const std::vector<std::tuple<>> none{{}};
  out.push_back(run_law<S>("derived.half_self_complement", none, {}, eq, s,
                           [&]() -> Outcome<S> { return equation(bar(half), half); }));

  auto one_var = sample_tuples(s, "D6", A);
  out.push_back(merge_reports(
      "derived.half_product",
      {run_law<S>("right", one_var, {"a"}, eq, s,
                  [&](const S& a) -> Outcome<S> { return equation(mul(a, half), mid(zero, a)); }),
       run_law<S>("left", one_var, {"a"}, eq, s,
                  [&](const S& a) -> Outcome<S> { return equation(mul(half, a), mid(zero, a)); })},
      s.max_witnesses));

  auto pairs = sample_tuples(s, "D7", A, A);
  out.push_back(run_law<S>("derived.half_product_cancellation", pairs, {"a", "a_prime"}, eq, s,
                           [&](const S& a, const S& b) -> Outcome<S> {
                             if (!eq.separated(a, b, s.separation)) return std::nullopt;
                             return distinction(mul(half, a), mul(half, b));
                           }));

  out.push_back(run_law<S>("derived.complement_midpoint", one_var, {"a"}, eq, s,
                           [&](const S& a) -> Outcome<S> { return equation(p(bar(a), half, a), half); }));

  out.push_back(run_law<S>("derived.self_complement_is_half", one_var, {"a"}, eq, s,
                           [&](const S& a) -> Outcome<S> {
                             if (!eq.separated(a, half, s.separation)) return std::nullopt;
                             return distinction(bar(a), a);
                           }));

  auto triples = sample_tuples(s, "D10", A, A, A);
  out.push_back(run_law<S>("derived.complement_of_p", triples, {"a", "b", "c"}, eq, s,
                           [&](const S& a, const S& b, const S& c) -> Outcome<S> {
                             return equation(bar(p(a, b, c)), p(bar(a), b, bar(c)));
                           }));
  out.push_back(run_law<S>("derived.reversal", triples, {"a", "b", "c"}, eq, s,
                           [&](const S& a, const S& b, const S& c) -> Outcome<S> {
                             return equation(p(c, b, a), p(a, bar(b), c));
                           }));
  out.push_back(run_law<S>("derived.circ_dot_duality", pairs, {"a", "b"}, eq, s,
                           [&](const S& a, const S& b) -> Outcome<S> {
                             return equation(bar(cir(a, b)), mul(bar(b), bar(a)));
                           }));
  out.push_back(run_law<S>("derived.half_product_expansion", triples, {"a", "b", "c"}, eq, s,
                           [&](const S& a, const S& b, const S& c) -> Outcome<S> {
                             return equation(mul(half, p(a, b, c)), mid(mul(bar(b), a), mul(b, c)));
                           }));
  return out;
}

// complement(complement(a)) = a.
template <class S>
LawReport check_double_complement(const MobiAlgebra<S>& alg, const SampleStrategy& s) {
  const auto p = closed(alg.carrier, alg.p);
  auto bar = [&](const S& a) { return p(alg.one, a, alg.zero); };
  auto one_var = sample_tuples(s, "double-complement", alg.carrier);
  return run_law<S>("derived.double_complement", one_var, {"a"}, alg.eq, s,
                    [&](const S& a) -> Outcome<S> { return equation(bar(bar(a)), a); });
}

}  // namespace mobi
