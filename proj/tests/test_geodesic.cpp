#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "mobi/geodesic.hpp"
#include "mobi/instances/spaces.hpp"
#include "test_support.hpp"

using namespace mobi;
using mobi::test::failing;
using mobi::test::report;

namespace {

SampleStrategy small(std::size_t count) {
  SampleStrategy s;
  s.count = count;
  return s;
}

double dist(const Vector& a, const Vector& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("straight-line flow of the zero field") {
  const auto f = flat_field(2);
  const auto r = integrate(f, {1, -2}, {0.5, 3}, 0.75);
  CHECK(dist(r.position, {1.375, 0.25}) < 1e-14);
  CHECK(dist(r.velocity, {0.5, 3}) < 1e-14);
}

TEST_CASE("projectile flow matches its closed form") {
  const auto f = projectile_field(1.0);
  const auto r = integrate(f, {0, 0}, {2, 1}, 1.0);
  CHECK(dist(r.position, {1, 1}) < 1e-12);
  const double k = 0.5, t = 0.8;
  const Vector x{0.3, -1}, v{-1, 1.5};
  const auto g = integrate(projectile_field(k), x, v, t);
  CHECK(dist(g.position, {x[0] + v[0] * t - k * v[1] * v[1] * t * t, x[1] + v[1] * t}) < 1e-12);
}

TEST_CASE("zero velocity stays put") {
  for (const auto& f : {projectile_field(1.0), polar_field(), log_line_field()}) {
    const Vector x = f.points.anchors.front();
    const auto r = integrate(f, x, Vector(x.size(), 0.0), 0.7);
    CHECK(dist(r.position, x) == 0.0);
    CHECK(dist(r.velocity, Vector(x.size(), 0.0)) == 0.0);
  }
}

TEST_CASE("leaving the domain raises a flow escape with its parameter") {
  const auto f = polar_field();
  // heading straight at the origin: r(t) = 2 - 4t hits 0 at t = 1/2
  try {
    integrate(f, {2, 0}, {-4, 0}, 1.0);
    FAIL("expected FlowEscape");
  } catch (const FlowEscape& e) {
    CHECK(e.exit_parameter() > 0.4);
    CHECK(e.exit_parameter() <= 0.51);
  }
  CHECK_THROWS_AS(integrate(f, {2, 0}, {0, 0}, NAN), DomainError);
}

TEST_CASE("homogeneity") {
  const auto s = small(100);
  CHECK(check_homogeneity(projectile_field(1.0), s).passed());
  CHECK(check_homogeneity(polar_field(), s).passed());
  CHECK(check_homogeneity(log_line_field(), s).passed());
  CHECK(check_homogeneity(time_augmented_oscillator(1.0), s).passed());
  auto linear = flat_field(1);
  linear.accel = [](const double*, const double* v, double* out) { out[0] = v[0]; };
  CHECK_FALSE(check_homogeneity(linear, s).passed());
}

TEST_CASE("christoffel fields") {
  const auto zero = christoffel_field("zero", 2, [](const double*, double*) {});
  double out[2] = {7, 7};
  const double x[2] = {1, 2}, v[2] = {3, -4};
  zero.accel(x, v, out);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);

  // x'' = -x'^2 from (0, 1): x(t) = log(1 + t); also checked against 8x the steps
  const auto f = log_line_field();
  const auto coarse = integrate(f, {0}, {1}, 1.0);
  IntegratorConfig fine;
  fine.steps = 8 * IntegratorConfig{}.steps;
  const auto reference = integrate(f, {0}, {1}, 1.0, fine);
  CHECK(std::fabs(coarse.position[0] - std::log(2.0)) < 1e-10);
  CHECK(std::fabs(coarse.position[0] - reference.position[0]) < 1e-10);
  CHECK(std::fabs(coarse.velocity[0] - 0.5) < 1e-10);
}

TEST_CASE("shooting") {
  const auto proj = projectile_field(1.0);
  CHECK(dist(shoot_beta(proj, {0, 0}, {1, 1}), {2, 1}) < 1e-8);
  CHECK(dist(shoot_beta(proj, {0.5, -1}, {0.5, -1}), {0, 0}) < 1e-10);
  CHECK(dist(shoot_beta(flat_field(3), {1, 2, 3}, {0, 0, 1}), {-1, -2, -2}) < 1e-10);
  // log-line: beta = e^(y - x) - 1; the plain y - x start runs into the pole
  const auto lg = log_line_field();
  CHECK(std::fabs(shoot_beta(lg, {0.9385283093393435}, {-0.06305698455687295})[0] -
                  std::expm1(-0.06305698455687295 - 0.9385283093393435)) < 1e-8);

  ShootingConfig tight;
  tight.max_iterations = 1;
  tight.residual_tolerance = 1e-300;
  CHECK_THROWS_AS(shoot_beta(lg, {0}, {1}, {}, tight), ShootingFailure);
  ShootingConfig bad;
  bad.residual_tolerance = 0;
  CHECK_THROWS_AS(shoot_beta(proj, {0, 0}, {1, 1}, {}, bad), ConfigurationError);
}

TEST_CASE("geodesic space of the projectile field matches the closed form") {
  const auto sp = geodesic_space(projectile_field(1.0));
  const auto closed = projectile_space<double>(1.0);
  const auto tuples = sample_tuples(small(200), "geodesic-oracle", sp.points, sp.algebra.carrier, sp.points);
  double worst = 0;
  for (const auto& [x, t, y] : tuples) worst = std::max(worst, dist(sp.q(x, t, y), closed.q(x, t, y)));
  CHECK(worst < 1e-6);
  const auto s = small(60);
  CHECK(failing(check_space(sp, s)).empty());
}

TEST_CASE("geodesic space of the zero field is euclidean") {
  const auto sp = geodesic_space(flat_field(2));
  const auto flat = euclidean_space<double>(2);
  for (const auto& [x, t, y] : sample_tuples(small(50), "flat", sp.points, sp.algebra.carrier, sp.points))
    CHECK(dist(sp.q(x, t, y), flat.q(x, t, y)) < 1e-12);
}

TEST_CASE("memoized shooting is safe under concurrent queries") {
  const auto sp = geodesic_space(polar_field());
  const Vector x{2.5, 0.1}, y{2.2, -0.3};
  const Vector expected = sp.q(x, 0.3, y);
  std::vector<Vector> got(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] {
      for (int k = 0; k < 20; ++k) got[static_cast<std::size_t>(i)] = sp.q(x, 0.3, y);
    });
  for (auto& t : threads) t.join();
  for (const auto& g : got) CHECK(g == expected);
}

TEST_CASE("time-augmented fields") {
  const auto proj = geodesic_space(time_augmented_projectile(1.0));
  const auto closed = projectile_space<double>(1.0);
  const auto osc = geodesic_space(time_augmented_oscillator(1.0));
  const auto osc_closed = oscillator_space(1.0);
  const auto tuples = sample_tuples(small(100), "ta", proj.points, proj.algebra.carrier, proj.points);
  int compared = 0;
  for (const auto& [x, t, y] : tuples) {
    if (std::fabs(y[1] - x[1]) < 0.1) continue;
    ++compared;
    const auto a = proj.q(x, t, y);
    CHECK(dist(a, closed.q(x, t, y)) < 1e-6);
    // last coordinate is (1-t) t1 + t t2
    CHECK(std::fabs(a[1] - ((1 - t) * x[1] + t * y[1])) < 1e-9);
  }
  CHECK(compared > 50);
  for (const auto& [x, t, y] : sample_tuples(small(100), "osc", osc.points, osc.algebra.carrier, osc.points)) {
    if (std::fabs(y[1] - x[1]) < 0.1) continue;
    CHECK(dist(osc.q(x, t, y), osc_closed.q(x, t, y)) < 1e-6);
  }

  // equal times with a position gap are singular
  CHECK_THROWS_AS(proj.q({0, 0.5}, 0.5, {1, 0.5}), SingularVelocity);
  const auto f = time_augmented_projectile(1.0);
  double out[2] = {1, 1};
  const double x[2] = {0, 0}, rest[2] = {0, 0};
  f.accel(x, rest, out);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);
}

TEST_CASE("flow identities on the projectile field") {
  const auto reports = verify_flow_identities(projectile_field(1.0), small(100), {}, {}, 1e-6);
  CHECK(reports.size() == 10);
  CHECK(failing(reports).empty());
  CHECK(report(reports, "beta.end_velocity").samples > 0);
  CHECK(check_velocity_cancellation(projectile_field(1.0), small(60)).passed());
}

TEST_CASE("flow identities hold to machine precision for the zero field") {
  const auto reports = verify_flow_identities(flat_field(2), small(60), {}, {}, 1e-12);
  CHECK(failing(reports).empty());
}

TEST_CASE("trace CSV") {
  const auto rows = trace_geodesic(projectile_field(1.0), {0, 0}, {0, 1}, 101, {}, {});
  REQUIRE(rows.size() == 101);
  CHECK(rows[50].t == doctest::Approx(0.5));
  CHECK(rows[50].position[0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(rows[50].position[1] == doctest::Approx(0.5).epsilon(1e-9));
  std::ostringstream out;
  write_trace_csv(out, rows);
  const std::string text = out.str();
  CHECK(text.rfind("t,x_1,x_2,v_1,v_2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 102);

  const auto same = trace_geodesic(polar_field(), {2.5, 0.2}, {2.5, 0.2}, 11, {}, {});
  for (const auto& r : same) CHECK(dist(r.position, {2.5, 0.2}) < 1e-12);
}
