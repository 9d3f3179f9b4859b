#pragma once

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "mobi/space.hpp"

namespace mobi {

using Vector = std::vector<double>;

// Second-order field x'' = g(x, x') on an open subset of R^n.
struct GeodesicField {
  std::string name;
  int n = 0;
  // out = g(x, v); all three arrays have n entries.
  std::function<void(const double* x, const double* v, double* out)> accel;
  // Empty means all of R^n.
  std::function<bool(const double* x)> domain;
  // Sampling domains for law suites.
  Carrier<Vector> points;
  Carrier<Vector> velocities;

  Vector g(const Vector& x, const Vector& v) const;
  bool inside(const Vector& x) const { return !domain || domain(x.data()); }
};

struct IntegratorConfig {
  int steps = 1024;  // RK4 steps per unit of parameter
};

struct ShootingConfig {
  int max_iterations = 50;
  double residual_tolerance = 1e-10;
  double difference_step = 1e-6;
  int max_halvings = 8;
};

struct FlowResult {
  Vector position;
  Vector velocity;
};

// Fixed-step RK4 on (x, v)' = (v, g(x, v)) from parameter 0 to t.
// Throws FlowEscape when a stage leaves the domain or turns non-finite.
FlowResult integrate(const GeodesicField& field, const Vector& x, const Vector& v, double t,
                     const IntegratorConfig& cfg = {});

// g(x, lambda v) = lambda^2 g(x, v) for lambda in {-2, -1, 0, 1/2, 3}.
LawReport check_homogeneity(const GeodesicField& field, const SampleStrategy& s, double tolerance = 1e-9);

// Newton shooting for v with integrate(x, v, 1).position = y, starting at y - x.
// The returned velocity has been re-integrated and meets the residual tolerance.
Vector shoot_beta(const GeodesicField& field, const Vector& x, const Vector& y, const IntegratorConfig& icfg = {},
                  const ShootingConfig& scfg = {});

// q(x, t, y) = integrate(x, beta(x, y), t).position over the unit interval,
// with beta memoized per endpoint pair.
MobiSpace<double, Vector> geodesic_space(const GeodesicField& field, const IntegratorConfig& icfg = {},
                                         const ShootingConfig& scfg = {}, double tolerance = 1e-6);

// g_k(x, v) = -sum_ij v_i Gamma^k_ij(x) v_j; `symbols` fills n^3 entries at k*n*n + i*n + j.
GeodesicField christoffel_field(std::string name, int n, std::function<void(const double* x, double* gamma)> symbols);

// Field on R^{n+1} with time as the last coordinate:
// g((x, t), (x', t')) = (t'^2 f(x, x'/t', t), 0). At t' = 0 the value is 0 if
// x' = 0 and SingularVelocity otherwise.
GeodesicField time_augmented_field(std::string name, int n,
                                   std::function<void(const double* x, const double* xdot, double t, double* out)> f);

// Catalogue fields.
GeodesicField flat_field(int n);
GeodesicField projectile_field(double k);
// Polar coordinates (r, theta) of the Euclidean plane, r > 0.
GeodesicField polar_field();
// n = 1, Gamma = 1: x'' = -x'^2.
GeodesicField log_line_field();
// Time-augmented f = -2k (the projectile) and f = -k^2 x - 2k x' (critically damped oscillator).
GeodesicField time_augmented_projectile(double k);
GeodesicField time_augmented_oscillator(double k);

// Flow and shooting identities; beta-based ones use shooting and skip
// tuples where it does not converge.
std::vector<LawReport> verify_flow_identities(const GeodesicField& field, const SampleStrategy& s,
                                              const IntegratorConfig& icfg = {}, const ShootingConfig& scfg = {},
                                              double tolerance = 1e-6);

// Searches for v1 != v2 with integrate(x, v1, s) = integrate(x, v2, s), s in {1/4, 1/2, 1}.
LawReport check_velocity_cancellation(const GeodesicField& field, const SampleStrategy& s,
                                      const IntegratorConfig& icfg = {}, double tolerance = 1e-6);

// CSV rows t,x_1..x_n[,v_1..v_n] at `resolution` evenly spaced parameters in [0, 1].
struct TraceRow {
  double t;
  Vector position;
  Vector velocity;  // empty for closed-form spaces
};
std::vector<TraceRow> trace_geodesic(const GeodesicField& field, const Vector& x, const Vector& y, int resolution,
                                     const IntegratorConfig& icfg = {}, const ShootingConfig& scfg = {});
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);

}  // namespace mobi
