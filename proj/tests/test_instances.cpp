#include <cmath>

#include "mobi/instances/finite.hpp"
#include "mobi/instances/spaces.hpp"
#include "test_support.hpp"

using namespace mobi;
using mobi::test::failing;
using mobi::test::q;
using mobi::test::report;
using QV = Vec<Rational>;

namespace {

SampleStrategy small(std::size_t count = 100) {
  SampleStrategy s;
  s.count = count;
  return s;
}

// Sampled (x, t, y) triples over a space's own carriers.
template <class S, class P>
std::vector<std::tuple<P, S, P>> triples(const MobiSpace<S, P>& sp, std::size_t count) {
  return sample_tuples(small(count), "closed-form", sp.points, sp.algebra.carrier, sp.points);
}

}  // namespace

TEST_CASE("euclidean space") {
  const auto sp = euclidean_space<Rational>(2);
  CHECK(sp.q(QV{q(0), q(0)}, q(1, 2), QV{q(2), q(4)}) == QV{q(1), q(2)});
  CHECK(sp.q(QV{q(3), q(-1)}, q(0), QV{q(2), q(4)}) == QV{q(3), q(-1)});
  CHECK(check_affine(sp, small()).passed());
  CHECK_THROWS_AS(euclidean_space<Rational>(0), DomainError);
}

TEST_CASE("f-transform spaces") {
  const auto lg = log_transform_space();
  CHECK(lg.q(1.0, 0.5, 4.0) == doctest::Approx(2.0).epsilon(1e-12));
  const auto rec = reciprocal_transform_space<Rational>();
  CHECK(rec.q(q(1), q(1, 2), q(3)) == q(3, 2));
  CHECK_THROWS_AS(rec.q(q(-1), q(1, 2), q(3)), DomainError);

  // Closed forms x^(1-t) y^t and xy / (tx + (1-t)y) on 100 tuples each.
  for (const auto& [x, t, y] : triples(lg, 100))
    CHECK(lg.q(x, t, y) == doctest::Approx(std::pow(x, 1 - t) * std::pow(y, t)).epsilon(1e-12));
  for (const auto& [x, t, y] : triples(rec, 100)) CHECK(rec.q(x, t, y) == x * y / (t * x + (1 - t) * y));

  const auto id = identity_transform_space<Rational>();
  const auto line = euclidean_space<Rational>(1);
  for (const auto& [x, t, y] : triples(id, 100)) CHECK(QV{id.q(x, t, y)} == line.q(QV{x}, t, QV{y}));
}

TEST_CASE("graph family closed forms") {
  const auto cube = graph_cube_space<Rational>();
  CHECK(cube.q(QV{q(0), q(0)}, q(1, 3), QV{q(1), q(1)}) == QV{q(1, 3), q(1, 27)});
  CHECK(cube.q(QV{q(2), q(0)}, q(1, 2), QV{q(2), q(6)}) == QV{q(2), q(3)});
  // the line through (0,0): x2 + (y2 - x2) t^3 when x1 = 0, y1 = 1
  for (const auto& [x, t, y] : triples(cube, 100)) {
    const auto out = cube.q(x, t, y);
    CHECK(out[0] == x[0] + t * (y[0] - x[0]));
    if (x[0] != y[0]) {
      const Rational f = (out[0] * out[0] * out[0] - x[0] * x[0] * x[0]) / (y[0] * y[0] * y[0] - x[0] * x[0] * x[0]);
      CHECK(out[1] == x[1] + (y[1] - x[1]) * f);
    }
  }

  const auto inv = graph_inverse_space<Rational>();
  for (const auto& [x, t, y] : triples(inv, 100)) {
    const auto out = inv.q(x, t, y);
    const Rational q1 = (1 - t) * x[0] + t * y[0];
    CHECK(out == QV{q1, x[1] + (y[1] - x[1]) * t * y[0] / q1});
  }
  const auto sq = graph_square_space<Rational>();
  for (const auto& [x, t, y] : triples(sq, 100)) {
    const auto out = sq.q(x, t, y);
    const Rational q1 = (1 - t) * x[0] + t * y[0];
    const Rational expected = x[0] == y[0] ? (1 - t) * x[1] + t * y[1] : x[1] + (y[1] - x[1]) * t * (q1 + x[0]) / (y[0] + x[0]);
    CHECK(out == QV{q1, expected});
  }
}

TEST_CASE("graph family over a non-injective f reports a domain error") {
  auto plane = detail::box_carrier<Rational>("R^2", {{-3, 3}, {-3, 3}}, {}, {});
  const auto sp = graph_family_space<Rational>("square on R", [](const Rational& v) { return Rational(v * v); }, plane);
  CHECK_THROWS_AS(sp.q(QV{q(-1), q(0)}, q(1, 2), QV{q(1), q(2)}), DomainError);
}

TEST_CASE("graph spaces pass X and Y; cube and square are not affine") {
  const auto s = small(150);
  for (const auto& sp : {graph_cube_space<Rational>(), graph_square_space<Rational>(), graph_inverse_space<Rational>()}) {
    CAPTURE(sp.name);
    CHECK(failing(check_space(sp, s)).empty());
    CHECK(failing(check_space_properties(sp, s)).empty());
  }
  CHECK_FALSE(check_affine(graph_cube_space<Rational>(), s).passed());
  CHECK_FALSE(check_affine(graph_square_space<Rational>(), s).passed());
  CHECK(check_affine(graph_inverse_space<Rational>(), s).passed());
}

TEST_CASE("cylinder charts choose different paths across the cut") {
  const auto sym = cylinder_chart_space<Rational>(CylinderChart::symmetric);
  const auto pos = cylinder_chart_space<Rational>(CylinderChart::positive);
  CHECK(sym.q(QV{q(-1, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}) == QV{q(0), q(0)});
  CHECK(pos.q(QV{q(7, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}) == QV{q(1), q(0)});
  CHECK(pos.q(QV{q(1, 2), q(1)}, q(1, 3), QV{q(1, 2), q(1)}) == QV{q(1, 2), q(1)});
  CHECK_THROWS_AS(pos.at(QV{q(-1, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}), DomainError);
  CHECK_THROWS_AS(sym.at(QV{q(3, 2), q(0)}, q(1, 2), QV{q(1, 4), q(0)}), DomainError);
}

TEST_CASE("projectile and oscillator spaces") {
  const auto p1 = projectile_space<Rational>(q(1));
  CHECK(p1.q(QV{q(0), q(0)}, q(1, 2), QV{q(0), q(1)}) == QV{q(1, 4), q(1, 2)});
  for (const auto& [x, t, y] : triples(p1, 50)) CHECK(p1.q(x, q(1), y) == y);

  const auto osc = oscillator_space(0.0);
  const auto flat = euclidean_space<double>(2);
  for (const auto& [x, t, y] : triples(osc, 100)) {
    const auto a = osc.q(x, t, y), b = flat.q(x, t, y);
    CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-12));
  }
}

TEST_CASE("lozenge space") {
  using L = LozengeScalar<Rational>;
  const auto plus = lozenge_space<Rational>(1);
  CHECK(plus.q(q(0), L{q(1, 2), q(1, 4)}, q(1)) == q(3, 4));
  CHECK(plus.q(q(1, 3), L{q(0), q(0)}, q(1)) == q(1, 3));
  CHECK_THROWS_AS(lozenge_space<Rational>(2), DomainError);
  CHECK_THROWS_AS(lozenge_space<Rational>(0), DomainError);

  const auto minus = lozenge_space<Rational>(-1);
  CHECK(minus.q(q(0), L{q(1), q(0)}, q(1)) == q(1));
  CHECK(minus.q(q(0), L{q(1, 2), q(-1, 2)}, q(1)) == q(1));
  const auto& inj = check_injectivity_conjecture(minus, small());
  CHECK_FALSE(inj.passed());
  CHECK(failing(check_space(minus, small())).empty());
  CHECK(failing(check_space_properties(minus, small())).empty());
}

TEST_CASE("lozenge space agrees with the phi construction; phi is a homomorphism only for h = +-1") {
  for (int h : {1, -1}) {
    const auto direct = lozenge_space<Rational>(h);
    const auto built = lozenge_space_from_phi<Rational>(q(h));
    for (const auto& [x, a, y] : triples(direct, 200)) CHECK(direct.q(x, a, y) == built.q(x, a, y));
    CHECK(check_lozenge_phi_homomorphism<Rational>(q(h), small()).passed());
  }
  CHECK_FALSE(check_lozenge_phi_homomorphism<Rational>(q(2), small()).passed());
  CHECK_FALSE(check_lozenge_phi_homomorphism<Rational>(q(0), small()).passed());
}

TEST_CASE("lozenge algebra satisfies the axioms") {
  const auto alg = lozenge_algebra<Rational>();
  CHECK(failing(check_algebra(alg, small(300))).empty());
  CHECK(failing(check_derived(alg, small(300))).empty());
}

TEST_CASE("designed counterexamples") {
  const auto p1d = counterexample_1d_projectile<Rational>(q(1));
  CHECK(p1d.q(q(0), q(1, 2), q(0)) == q(1, 4));
  const auto x = check_space(p1d, small());
  CHECK_FALSE(report(x, "X3.idempotency").passed());
  CHECK_FALSE(report(x, "X5.homomorphism").passed());
  CHECK(report(x, "X1.start").passed());
  CHECK(report(x, "X2.end").passed());

  const auto p0 = counterexample_1d_projectile<Rational>(q(0));
  CHECK(failing(check_space(p0, small())).empty());

  const auto ts = counterexample_tsquare<Rational>();
  const auto alg = ts.algebra;
  CHECK(ts.q(ts.q(q(0), q(1, 2), q(1)), q(1, 2), q(1)) == q(7, 16));
  CHECK(ts.q(q(0), alg.p(q(1, 2), q(1, 2), q(1)), q(1)) == q(9, 16));
  const auto t = check_space(ts, small());
  CHECK(report(t, "X1.start").passed());
  CHECK(report(t, "X2.end").passed());
  CHECK(report(t, "X3.idempotency").passed());
  CHECK_FALSE(report(t, "X5.homomorphism").passed());
}

TEST_CASE("rings and ring algebras") {
  const auto z9 = ring_algebra(modular_ring(9));
  CHECK(failing(check_algebra(z9, small())).empty());
  CHECK(*z9.two == ModInt(2, 9));
  CHECK_THROWS_AS(ring_algebra(modular_ring(8)), ConstructionError);
  auto broken = number_ring<Rational>();
  broken.half = q(1, 3);
  CHECK_THROWS_AS(ring_algebra(broken), ConstructionError);
  broken.half.reset();
  CHECK_THROWS_AS(ring_algebra(broken), ConstructionError);
  CHECK(failing(check_algebra(line_algebra<Rational>(), small())).empty());
}

TEST_CASE("endomorphism algebras of Z_9 pass A1-A8 exhaustively") {
  const auto endo = endo_algebra(9);
  REQUIRE(endo.carrier.finite());
  CHECK(endo.carrier.elements.size() == 9);
  const auto reports = check_algebra(endo, small(10));
  CHECK(failing(reports).empty());
  CHECK(report(reports, "A8.mediality").samples == 9u * 9u * 9u * 9u * 9u);
  CHECK_THROWS_AS(endo_algebra(10), ConstructionError);

  const auto mid = midpoint_endo_algebra(9);
  CHECK(failing(check_algebra(mid, small(10))).empty());
  CHECK(failing(check_derived(mid, small(10))).empty());
}

TEST_CASE("midpoint endomorphisms of Z_5 by brute force") {
  const MidpointZn x(5);
  const auto members = midpoint_endo_members(x);
  // every self-map was tried; the survivors are exactly the 5 scaling maps
  CHECK(members.size() == 5);
  const auto alg = midpoint_endo_algebra(5);
  CHECK(failing(check_algebra(alg, small(10))).empty());
  CHECK(report(check_algebra(alg, small(10)), "A1.half_complement").samples > 0);
}

TEST_CASE("membership conditions hold for every member up to n = 15") {
  for (int n = 3; n <= 15; n += 2) {
    const MidpointZn x(n);
    for (const auto& g : midpoint_endo_members(x)) {
      const auto c = midpoint_endo_conditions(x, g);
      CHECK(c.all());
      CHECK(g(x.e) == x.e);
    }
  }
  const MidpointZn x(7);
  EndoMap shift;
  for (int i = 0; i < 7; ++i) shift.table.push_back((i + 1) % 7);
  const auto c = midpoint_endo_conditions(x, shift);
  CHECK(c.preserves_midpoint);
  CHECK_FALSE(c.fixes_base);
  CHECK_FALSE(c.all());
}
