#include <string>

#include "mobi/quotient.hpp"
#include "test_support.hpp"

using namespace mobi;
using mobi::test::failing;
using mobi::test::q;
using mobi::test::report;
using QV = Vec<Rational>;

namespace {

SampleStrategy small(std::size_t count = 150) {
  SampleStrategy s;
  s.count = count;
  return s;
}

}  // namespace

TEST_CASE("cylinder lift branches") {
  const auto qd = cylinder_quotient<Rational>();
  CHECK(qd.theta(QV{q(0), q(0)}, QV{q(3, 2), q(5)}) == QV{q(-1, 2), q(5)});
  CHECK(qd.theta(QV{q(0), q(0)}, QV{q(1), q(5)}) == QV{q(1), q(5)});
  CHECK(qd.theta(QV{q(3, 2), q(0)}, QV{q(0), q(1)}) == QV{q(2), q(1)});
  for (const auto& u : qd.target.anchors) CHECK(qd.theta(u, u) == qd.s(u));
  CHECK(wrap_angle(q(9, 4)) == q(1, 4));
  CHECK(wrap_angle(q(-1, 2)) == q(3, 2));
  CHECK(wrap_angle(q(2)) == q(0));
  CHECK(wrap_angle(-0.5) == doctest::Approx(1.5));
}

TEST_CASE("cylinder data satisfies every condition") {
  const auto qd = cylinder_quotient<Rational>();
  const auto reports = check_quotient_conditions(qd, small());
  CHECK(reports.size() == 5);
  CHECK(failing(reports).empty());
  CHECK(check_cylinder_shortest_path(qd, small(1000)).passed());
}

TEST_CASE("identity quotient collapses to the base axioms") {
  QuotientData<Rational, QV> qd;
  qd.name = "identity";
  qd.base = euclidean_space<Rational>(2);
  qd.target = qd.base.points;
  qd.h = [](const QV& x) { return x; };
  qd.s = [](const QV& x) { return x; };
  qd.theta = [](const QV&, const QV& v) { return v; };
  qd.target_eq = backend_equality<QV>();
  CHECK(failing(check_quotient_conditions(qd, small())).empty());
  const auto sp = quotient_space(qd, small(50));
  for (const auto& [u, a, v] : sample_tuples(small(50), "id", sp.points, sp.algebra.carrier, sp.points))
    CHECK(sp.q(u, a, v) == qd.base.q(u, a, v));
}

TEST_CASE("the identity lift keeps the conditions but loses the shortest path") {
  const auto qd = cylinder_quotient<Rational>(CylinderLift::none);
  CHECK(failing(check_quotient_conditions(qd, small())).empty());
  const auto sp = check_cylinder_shortest_path(qd, small());
  REQUIRE_FALSE(sp.passed());
  // it reproduces the [0, 2pi) chart
  const auto space = quotient_space(qd, small(50));
  const auto chart = cylinder_chart_space<Rational>(CylinderChart::positive);
  for (const auto& [u, a, v] : sample_tuples(small(100), "chart", space.points, space.algebra.carrier, space.points))
    CHECK(space.q(u, a, v) == chart.q(u, a, v));
}

TEST_CASE("cylinder quotient space") {
  const auto qd = cylinder_quotient<Rational>();
  const auto sp = quotient_space(qd, small(60));
  CHECK(sp.q(QV{q(7, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}) == QV{q(0), q(0)});
  CHECK(sp.q(QV{q(1, 4), q(2)}, q(0), QV{q(7, 4), q(-1)}) == QV{q(1, 4), q(2)});
  CHECK(failing(check_space(sp, small())).empty());
  CHECK(failing(check_space_properties(sp, small())).empty());
  for (const auto& [u, a, v] : sample_tuples(small(100), "defining", sp.points, sp.algebra.carrier, sp.points))
    CHECK(sp.q(u, a, v) == qd.h(qd.base.q(qd.s(u), a, qd.theta(u, v))));
}

TEST_CASE("the quotient differs from both charts on straddling pairs") {
  const auto sp = quotient_space(cylinder_quotient<Rational>(), small(30));
  const auto positive = cylinder_chart_space<Rational>(CylinderChart::positive);
  const auto symmetric = cylinder_chart_space<Rational>(CylinderChart::symmetric);
  // positive chart goes the long way from 7pi/4 to pi/4
  CHECK(positive.q(QV{q(7, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}) == QV{q(1), q(0)});
  CHECK(sp.q(QV{q(7, 4), q(0)}, q(1, 2), QV{q(1, 4), q(0)}) == QV{q(0), q(0)});
  // symmetric chart: 3pi/4 -> 5pi/4 (= -3pi/4 in its coordinates) goes through 0
  const QV chart_mid = symmetric.q(QV{q(3, 4), q(0)}, q(1, 2), QV{q(-3, 4), q(0)});
  CHECK(chart_mid == QV{q(0), q(0)});
  CHECK(sp.q(QV{q(3, 4), q(0)}, q(1, 2), QV{q(5, 4), q(0)}) == QV{q(1), q(0)});
}

TEST_CASE("a broken section is refused with its report") {
  auto qd = cylinder_quotient<Rational>();
  qd.s = [](const QV& u) { return QV{u[0], u[1] + 1}; };
  try {
    quotient_space(qd, small(30));
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("quotient.section") != std::string::npos);
  }
}

TEST_CASE("approximate backend agrees") {
  const auto qd = cylinder_quotient<double>();
  CHECK(failing(check_quotient_conditions(qd, small())).empty());
  const auto sp = quotient_space(qd, small(30));
  const auto mid = sp.q(Vec<double>{1.75, 0}, 0.5, Vec<double>{0.25, 0});
  CHECK(mid[0] == doctest::Approx(0.0));
}
