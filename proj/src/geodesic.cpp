#include "mobi/geodesic.hpp"
#include "mobi/instances/algebras.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <mutex>

namespace mobi {

namespace {

double inf_norm(const Vector& v) {
  double m = 0.0;
  for (double c : v) {
    if (!std::isfinite(c)) return INFINITY;
    m = std::max(m, std::fabs(c));
  }
  return m;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vector scaled(const Vector& v, double s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void require_size(const GeodesicField& field, const Vector& v, const char* what) {
  if (v.size() != static_cast<std::size_t>(field.n))
    throw DomainError(std::string(what) + " has dimension " + std::to_string(v.size()) + ", field " + field.name +
                      " needs " + std::to_string(field.n));
}

Carrier<Vector> box(std::string name, std::vector<std::pair<double, double>> bounds, std::vector<Vector> anchors,
                    std::function<bool(const Vector&)> extra = {}) {
  Carrier<Vector> c;
  c.name = std::move(name);
  const std::size_t n = bounds.size();
  c.contains = [n, extra](const Vector& x) {
    if (x.size() != n) return false;
    for (double v : x)
      if (!std::isfinite(v)) return false;
    return !extra || extra(x);
  };
  c.draw = [bounds](Rng& rng) {
    Vector x;
    for (const auto& [lo, hi] : bounds) x.push_back(lo + (hi - lo) * unit_double(rng));
    return x;
  };
  c.anchors = std::move(anchors);
  return c;
}

Carrier<double> parameter_carrier() {
  Carrier<double> c;
  c.name = "[0,1]";
  c.contains = [](const double& t) { return t >= 0 && t <= 1; };
  c.draw = [](Rng& rng) { return unit_double(rng); };
  c.anchors = {0.0, 0.25, 0.5, 1.0};
  return c;
}

}  // namespace

Vector GeodesicField::g(const Vector& x, const Vector& v) const {
  require_size(*this, x, "position");
  require_size(*this, v, "velocity");
  Vector out(static_cast<std::size_t>(n), 0.0);
  accel(x.data(), v.data(), out.data());
  return out;
}

FlowResult integrate(const GeodesicField& field, const Vector& x, const Vector& v, double t,
                     const IntegratorConfig& cfg) {
  require_size(field, x, "position");
  require_size(field, v, "velocity");
  if (cfg.steps < 1) throw ConfigurationError("integrator needs at least one step");
  if (!std::isfinite(t)) throw DomainError("flow parameter must be finite");

  const std::size_t n = static_cast<std::size_t>(field.n);
  const std::size_t m = 2 * n;
  std::vector<double> y(m), k1(m), k2(m), k3(m), k4(m), tmp(m);
  std::copy(x.begin(), x.end(), y.begin());
  std::copy(v.begin(), v.end(), y.begin() + static_cast<std::ptrdiff_t>(n));

  auto check = [&](const std::vector<double>& s, double param) {
    for (double c : s)
      if (!std::isfinite(c)) throw FlowEscape("flow of " + field.name + " became non-finite", param);
    if (field.domain && !field.domain(s.data()))
      throw FlowEscape("flow of " + field.name + " left its domain", param);
  };
  auto deriv = [&](const std::vector<double>& s, std::vector<double>& out) {
    std::copy(s.begin() + static_cast<std::ptrdiff_t>(n), s.end(), out.begin());
    field.accel(s.data(), s.data() + n, out.data() + n);
  };
  check(y, 0.0);
  if (t == 0.0) return {x, v};

  const long steps = std::max(1L, static_cast<long>(std::ceil(cfg.steps * std::fabs(t) - 1e-9)));
  const double h = t / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const double t0 = static_cast<double>(i) * h;
    deriv(y, k1);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    check(tmp, t0 + 0.5 * h);
    deriv(tmp, k2);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    check(tmp, t0 + 0.5 * h);
    deriv(tmp, k3);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = y[j] + h * k3[j];
    check(tmp, t0 + h);
    deriv(tmp, k4);
    for (std::size_t j = 0; j < m; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    check(y, t0 + h);
  }
  FlowResult r;
  r.position.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  r.velocity.assign(y.begin() + static_cast<std::ptrdiff_t>(n), y.end());
  return r;
}

LawReport check_homogeneity(const GeodesicField& field, const SampleStrategy& s, double tolerance) {
  static const double lambdas[] = {-2.0, -1.0, 0.0, 0.5, 3.0};
  auto tuples = sample_tuples(s, "homogeneity", field.points, field.velocities);
  return run_law<Vector>("field.homogeneity", tuples, {"x", "v"}, Equality<Vector>::approximate(tolerance), s,
                         [&](const Vector& x, const Vector& v) -> Outcome<Vector> {
                           const Vector base = field.g(x, v);
                           Vector lhs, rhs;
                           for (double l : lambdas) {
                             const Vector gl = field.g(x, scaled(v, l));
                             lhs.insert(lhs.end(), gl.begin(), gl.end());
                             const Vector expected = scaled(base, l * l);
                             rhs.insert(rhs.end(), expected.begin(), expected.end());
                           }
                           return equation(lhs, rhs);
                         });
}

Vector shoot_beta(const GeodesicField& field, const Vector& x, const Vector& y, const IntegratorConfig& icfg,
                  const ShootingConfig& scfg) {
  require_size(field, x, "start point");
  require_size(field, y, "end point");
  if (scfg.max_iterations < 1 || !(scfg.residual_tolerance > 0) || !(scfg.difference_step > 0))
    throw ConfigurationError("shooting configuration needs positive iterations and tolerances");
  const int n = field.n;

  // Residual r = pi(x, v, 1) - y; escapes count as an infinite residual.
  auto residual = [&](const Vector& v, Vector& r) -> double {
    try {
      const FlowResult f = integrate(field, x, v, 1.0, icfg);
      r.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = f.position[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)];
      return inf_norm(r);
    } catch (const FlowEscape&) {
      return INFINITY;
    }
  };

  // Damped Newton from the start v; throws ShootingFailure.
  auto newton = [&](Vector v) -> Vector {
    Vector r;
    double rn = residual(v, r);
    double best = rn;
    if (!std::isfinite(rn)) throw ShootingFailure("initial guess leaves the domain of " + field.name, best);

    Eigen::MatrixXd J(n, n);
    Eigen::VectorXd rhs(n);
    Vector column, rc, candidate;
    for (int iter = 0; iter < scfg.max_iterations && rn > scfg.residual_tolerance; ++iter) {
      for (int j = 0; j < n; ++j) {
        Vector vp = v;
        double h = scfg.difference_step;
        vp[static_cast<std::size_t>(j)] += h;
        if (!std::isfinite(residual(vp, column))) {
          h = -h;  // backward difference near the edge of the domain
          vp[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] + h;
          if (!std::isfinite(residual(vp, column)))
            throw ShootingFailure("Jacobian probe left the domain of " + field.name, best);
        }
        for (int i = 0; i < n; ++i)
          J(i, j) = (column[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i)]) / h;
      }
      for (int i = 0; i < n; ++i) rhs(i) = -r[static_cast<std::size_t>(i)];
      const Eigen::VectorXd delta = J.colPivHouseholderQr().solve(rhs);
      if (!delta.allFinite()) throw ShootingFailure("singular shooting Jacobian", best);

      double lambda = 1.0;
      double rcn = INFINITY;
      for (int halving = 0; halving <= scfg.max_halvings; ++halving) {
        candidate = v;
        for (int i = 0; i < n; ++i) candidate[static_cast<std::size_t>(i)] += lambda * delta(i);
        rcn = residual(candidate, rc);
        if (rcn < rn) break;
        lambda *= 0.5;
      }
      if (!std::isfinite(rcn)) throw ShootingFailure("damped Newton step left the domain of " + field.name, best);
      v = candidate;
      r = rc;
      rn = rcn;
      best = std::min(best, rn);
    }

    // Re-integrate the answer before handing it out.
    Vector check;
    const double final_residual = residual(v, check);
    if (!(final_residual <= scfg.residual_tolerance)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "shooting did not converge in %d iterations (best residual %.3g)",
                    scfg.max_iterations, best);
      throw ShootingFailure(buf, best);
    }
    return v;
  };

  // Start from y - x; if that attempt fails (a trial flow can run into a blow-up
  // that RK4 does not see), retry from y - x scaled by 1/2, 1/4, ...
  Vector start(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    start[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
  for (int attempt = 0;; ++attempt) {
    try {
      return newton(start);
    } catch (const ShootingFailure&) {
      if (attempt >= scfg.max_halvings) throw;
    }
    for (double& c : start) c *= 0.5;
  }
}

namespace {

struct BetaMemo {
  std::mutex mutex;
  std::map<std::vector<std::uint64_t>, Vector> values;
};

std::vector<std::uint64_t> bits_key(const Vector& x, const Vector& y) {
  std::vector<std::uint64_t> key;
  key.reserve(x.size() + y.size());
  for (const Vector* v : {&x, &y})
    for (double c : *v) {
      if (c == 0.0) c = 0.0;  // one key for +0 and -0
      std::uint64_t b;
      std::memcpy(&b, &c, sizeof b);
      key.push_back(b);
    }
  return key;
}

}  // namespace

MobiSpace<double, Vector> geodesic_space(const GeodesicField& field, const IntegratorConfig& icfg,
                                         const ShootingConfig& scfg, double tolerance) {
  MobiSpace<double, Vector> sp;
  sp.name = "geodesic:" + field.name;
  sp.algebra = interval_algebra<double>();
  sp.points = field.points;
  auto memo = std::make_shared<BetaMemo>();
  sp.q = [field, icfg, scfg, memo](const Vector& x, const double& t, const Vector& y) {
    const auto key = bits_key(x, y);
    Vector beta;
    bool found = false;
    {
      std::lock_guard<std::mutex> lock(memo->mutex);
      auto it = memo->values.find(key);
      if (it != memo->values.end()) {
        beta = it->second;
        found = true;
      }
    }
    if (!found) {
      // Shooting is deterministic, so a racing duplicate computes the same value.
      beta = shoot_beta(field, x, y, icfg, scfg);
      std::lock_guard<std::mutex> lock(memo->mutex);
      if (memo->values.size() > (1u << 18)) memo->values.clear();
      memo->values.emplace(key, beta);
    }
    return integrate(field, x, beta, t, icfg).position;
  };
  sp.eq = Equality<Vector>::approximate(tolerance);
  return sp;
}

GeodesicField christoffel_field(std::string name, int n, std::function<void(const double* x, double* gamma)> symbols) {
  if (n < 1) throw DomainError("field dimension must be positive");
  GeodesicField f;
  f.name = std::move(name);
  f.n = n;
  f.accel = [n, symbols](const double* x, const double* v, double* out) {
    thread_local std::vector<double> gamma;
    gamma.assign(static_cast<std::size_t>(n * n * n), 0.0);
    symbols(x, gamma.data());
    for (int k = 0; k < n; ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum += v[i] * gamma[static_cast<std::size_t>(k * n * n + i * n + j)] * v[j];
      out[k] = -sum;
    }
  };
  std::vector<std::pair<double, double>> pb(static_cast<std::size_t>(n), {-2.0, 2.0});
  std::vector<std::pair<double, double>> vb(static_cast<std::size_t>(n), {-1.0, 1.0});
  f.points = box("R^" + std::to_string(n), pb, {Vector(static_cast<std::size_t>(n), 0.0)});
  f.velocities = box("velocities in R^" + std::to_string(n), vb, {Vector(static_cast<std::size_t>(n), 0.0)});
  return f;
}

GeodesicField time_augmented_field(std::string name, int n,
                                   std::function<void(const double* x, const double* xdot, double t, double* out)> f) {
  if (n < 1) throw DomainError("field dimension must be positive");
  GeodesicField field;
  field.name = std::move(name);
  field.n = n + 1;
  field.accel = [n, f](const double* x, const double* v, double* out) {
    const double tp = v[n];
    if (tp == 0.0) {
      // Equal times: only a roundoff-sized position gap is tolerated (it is carried along a straight line).
      constexpr double rest = 1e-9;
      for (int i = 0; i < n; ++i)
        if (std::abs(v[i]) > rest) throw SingularVelocity("time-augmented field: zero time velocity with moving position");
      std::fill(out, out + n + 1, 0.0);
      return;
    }
    thread_local std::vector<double> xdot;
    xdot.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xdot[static_cast<std::size_t>(i)] = v[i] / tp;
    f(x, xdot.data(), x[n], out);
    for (int i = 0; i < n; ++i) out[i] *= tp * tp;
    out[n] = 0.0;
  };
  std::vector<std::pair<double, double>> pb(static_cast<std::size_t>(n + 1), {-2.0, 2.0});
  std::vector<std::pair<double, double>> vb(static_cast<std::size_t>(n + 1), {-1.0, 1.0});
  field.points = box("R^" + std::to_string(n + 1), pb, {});
  field.velocities = box("velocities in R^" + std::to_string(n + 1), vb, {});
  return field;
}

GeodesicField flat_field(int n) {
  auto f = christoffel_field("flat:" + std::to_string(n), n, [](const double*, double*) {});
  f.accel = [n](const double*, const double*, double* out) { std::fill(out, out + n, 0.0); };
  Vector ones(static_cast<std::size_t>(n), 1.0);
  f.points.anchors.push_back(ones);
  return f;
}

GeodesicField projectile_field(double k) {
  GeodesicField f;
  char buf[64];
  std::snprintf(buf, sizeof buf, "projectile:k=%g", k);
  f.name = buf;
  f.n = 2;
  f.accel = [k](const double*, const double* v, double* out) {
    out[0] = -2.0 * k * v[1] * v[1];
    out[1] = 0.0;
  };
  f.points = box("R^2", {{-3, 3}, {-3, 3}}, {{0, 0}, {0, 1}, {1, 1}, {-1, 2}});
  f.velocities = box("velocities in R^2", {{-2, 2}, {-2, 2}}, {{0, 0}, {2, 1}, {0, 1}});
  return f;
}

GeodesicField polar_field() {
  // Gamma^r_{theta theta} = -r, Gamma^theta_{r theta} = Gamma^theta_{theta r} = 1/r.
  auto f = christoffel_field("polar", 2, [](const double* x, double* gamma) {
    gamma[0 * 4 + 1 * 2 + 1] = -x[0];
    gamma[1 * 4 + 0 * 2 + 1] = 1.0 / x[0];
    gamma[1 * 4 + 1 * 2 + 0] = 1.0 / x[0];
  });
  f.domain = [](const double* x) { return x[0] > 0.0; };
  auto positive = [](const Vector& x) { return x[0] > 0.0; };
  f.points = box("r in [2,3], theta in [-1/2,1/2]", {{2, 3}, {-0.5, 0.5}}, {{2, 0}, {3, 0.5}, {2.5, -0.5}}, positive);
  f.velocities = box("velocities |v| <= 1/4", {{-0.25, 0.25}, {-0.25, 0.25}}, {{0, 0}, {0.25, 0}, {0, 0.25}});
  return f;
}

GeodesicField log_line_field() {
  auto f = christoffel_field("log-line", 1, [](const double*, double* gamma) { gamma[0] = 1.0; });
  f.points = box("[-1,1]", {{-1, 1}}, {{0}, {1}, {-1}});
  f.velocities = box("velocities in [-2/5,2/5]", {{-0.4, 0.4}}, {{0}, {0.4}});
  return f;
}

GeodesicField time_augmented_projectile(double k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "time-augmented:projectile:k=%g", k);
  auto f = time_augmented_field(buf, 1, [k](const double*, const double*, double, double* out) { out[0] = -2.0 * k; });
  f.points = box("R^2", {{-3, 3}, {-3, 3}}, {{0, 0}, {1, 1}, {-1, 2}, {0.5, -1}});
  f.velocities = box("velocities in R^2", {{-2, 2}, {-2, 2}}, {{0, 1}, {2, 1}});
  return f;
}

GeodesicField time_augmented_oscillator(double k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "time-augmented:oscillator:k=%g", k);
  auto f = time_augmented_field(buf, 1, [k](const double* x, const double* xdot, double, double* out) {
    out[0] = -k * k * x[0] - 2.0 * k * xdot[0];
  });
  f.points = box("R^2", {{-2, 2}, {-1, 1}}, {{0, 0}, {1, 1}, {-1, 0.5}, {0.5, -1}});
  f.velocities = box("velocities in R^2", {{-1, 1}, {-1, 1}}, {{0, 1}, {1, 0.5}});
  return f;
}

std::vector<LawReport> verify_flow_identities(const GeodesicField& field, const SampleStrategy& s,
                                              const IntegratorConfig& icfg, const ShootingConfig& scfg,
                                              double tolerance) {
  const auto& X = field.points;
  const auto& V = field.velocities;
  const auto T = parameter_carrier();
  const auto eq = Equality<Vector>::approximate(tolerance);
  auto pi = [&](const Vector& x, const Vector& v, double t) { return integrate(field, x, v, t, icfg); };
  auto beta = [&](const Vector& x, const Vector& y) { return shoot_beta(field, x, y, icfg, scfg); };
  const Vector zero(static_cast<std::size_t>(field.n), 0.0);
  std::vector<LawReport> out;

  auto xv = sample_tuples(s, "flow-initial", X, V);
  out.push_back(run_law<Vector>("flow.initial_state", xv, {"x", "v"}, eq, s,
                                [&](const Vector& x, const Vector& v) -> Outcome<Vector> {
                                  const auto f = pi(x, v, 0.0);
                                  return equation(concat(f.position, f.velocity), concat(x, v));
                                }));

  auto xt = sample_tuples(s, "flow-rest", X, T);
  out.push_back(run_law<Vector>("flow.zero_velocity", xt, {"x", "t"}, eq, s,
                                [&](const Vector& x, double t) -> Outcome<Vector> {
                                  return equation(pi(x, zero, t).position, x);
                                }));

  auto xvsut = sample_tuples(s, "flow-reparam", X, V, T, T, T);
  out.push_back(run_law<Vector>("flow.reparametrization", xvsut, {"x", "v", "s", "u", "t"}, eq, s,
                                [&](const Vector& x, const Vector& v, double ps, double u, double t) -> Outcome<Vector> {
                                  const auto mid = pi(x, v, ps);
                                  return equation(pi(x, v, ps + u * t).position,
                                                  pi(mid.position, scaled(mid.velocity, u), t).position);
                                }));

  auto xvst = sample_tuples(s, "flow-scaling", X, V, T, T);
  out.push_back(run_law<Vector>("flow.scaling", xvst, {"x", "v", "s", "t"}, eq, s,
                                [&](const Vector& x, const Vector& v, double ps, double t) -> Outcome<Vector> {
                                  return equation(pi(x, v, ps * t).position, pi(x, scaled(v, ps), t).position);
                                }));

  auto xvt = sample_tuples(s, "flow-reversal", X, V, T);
  out.push_back(run_law<Vector>("flow.time_reversal", xvt, {"x", "v", "t"}, eq, s,
                                [&](const Vector& x, const Vector& v, double t) -> Outcome<Vector> {
                                  const auto end = pi(x, v, 1.0);
                                  return equation(pi(x, v, 1.0 - t).position,
                                                  pi(end.position, scaled(end.velocity, -1.0), t).position);
                                }));

  out.push_back(run_law<Vector>("flow.restart", xvst, {"x", "v", "s", "t"}, eq, s,
                                [&](const Vector& x, const Vector& v, double ps, double t) -> Outcome<Vector> {
                                  const auto mid = pi(x, v, ps);
                                  return equation(pi(x, v, t).position,
                                                  pi(mid.position, scaled(mid.velocity, t - ps), 1.0).position);
                                }));

  auto x_only = sample_tuples(s, "beta-rest", X);
  out.push_back(run_law<Vector>("beta.at_rest", x_only, {"x"}, eq, s, [&](const Vector& x) -> Outcome<Vector> {
    return equation(beta(x, x), zero);
  }));

  auto xys = sample_tuples(s, "beta-scaling", X, X, T);
  out.push_back(run_law<Vector>("beta.scaling", xys, {"x", "y", "s"}, eq, s,
                                [&](const Vector& x, const Vector& y, double ps) -> Outcome<Vector> {
                                  Vector b;
                                  try {
                                    b = beta(x, y);
                                  } catch (const ShootingFailure&) {
                                    return std::nullopt;
                                  }
                                  return equation(scaled(b, ps), beta(x, pi(x, b, ps).position));
                                }));

  out.push_back(run_law<Vector>("beta.along_flow", xvst, {"x", "v", "s", "t"}, eq, s,
                                [&](const Vector& x, const Vector& v, double ps, double t) -> Outcome<Vector> {
                                  const auto at_s = pi(x, v, ps);
                                  const auto at_t = pi(x, v, t);
                                  Vector b;
                                  try {
                                    b = beta(at_s.position, at_t.position);
                                  } catch (const ShootingFailure&) {
                                    return std::nullopt;
                                  }
                                  return equation(b, scaled(at_s.velocity, t - ps));
                                }));

  auto xy = sample_tuples(s, "beta-end", X, X);
  out.push_back(run_law<Vector>("beta.end_velocity", xy, {"x", "y"}, eq, s,
                                [&](const Vector& x, const Vector& y) -> Outcome<Vector> {
                                  Vector forward, backward;
                                  try {
                                    forward = beta(x, y);
                                    backward = beta(y, x);
                                  } catch (const ShootingFailure&) {
                                    return std::nullopt;
                                  }
                                  return equation(pi(x, forward, 1.0).velocity, scaled(backward, -1.0));
                                }));
  return out;
}

LawReport check_velocity_cancellation(const GeodesicField& field, const SampleStrategy& s,
                                      const IntegratorConfig& icfg, double tolerance) {
  const auto eq = Equality<Vector>::approximate(tolerance);
  auto tuples = sample_tuples(s, "velocity-cancellation", field.points, field.velocities, field.velocities);
  std::vector<LawReport> parts;
  for (double at : {0.25, 0.5, 1.0}) {
    parts.push_back(run_law<Vector>("at", tuples, {"x", "v1", "v2"}, eq, s,
                                    [&](const Vector& x, const Vector& v1, const Vector& v2) -> Outcome<Vector> {
                                      if (!eq.separated(v1, v2, s.separation)) return std::nullopt;
                                      return distinction(integrate(field, x, v1, at, icfg).position,
                                                         integrate(field, x, v2, at, icfg).position);
                                    }));
  }
  return merge_reports("flow.velocity_cancellation", parts, s.max_witnesses);
}

std::vector<TraceRow> trace_geodesic(const GeodesicField& field, const Vector& x, const Vector& y, int resolution,
                                     const IntegratorConfig& icfg, const ShootingConfig& scfg) {
  if (resolution < 2) throw ConfigurationError("trace resolution must be at least 2");
  const Vector b = shoot_beta(field, x, y, icfg, scfg);
  std::vector<TraceRow> rows;
  for (int i = 0; i < resolution; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
    const auto f = integrate(field, x, b, t, icfg);
    rows.push_back({t, f.position, f.velocity});
  }
  return rows;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  if (rows.empty()) return;
  const std::size_t n = rows.front().position.size();
  const bool with_velocity = !rows.front().velocity.empty();
  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",x_" << i;
  if (with_velocity)
    for (std::size_t i = 1; i <= n; ++i) out << ",v_" << i;
  out << '\n';
  // Twelve significant digits: integrator roundoff stays out of the file.
  auto cell = [&](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    out << buf;
  };
  for (const auto& r : rows) {
    cell(r.t);
    for (double v : r.position) out << ',', cell(v);
    for (double v : r.velocity) out << ',', cell(v);
    out << '\n';
  }
}

}  // namespace mobi
