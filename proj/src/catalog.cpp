#include "mobi/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <type_traits>

#include "mobi/bridge.hpp"
#include "mobi/instances/finite.hpp"
#include "mobi/quotient.hpp"

namespace mobi {

const char* to_string(Backend b) { return b == Backend::exact ? "exact" : "approx"; }

Backend parse_backend(const std::string& text) {
  if (text == "exact") return Backend::exact;
  if (text == "approx") return Backend::approx;
  throw ConfigurationError("unknown backend '" + text + "' (expected exact or approx)");
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(part));
    } catch (const Error&) {
      throw ConfigurationError("cannot read coordinate '" + part + "' in point '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

template <class T>
struct Tag {
  using type = T;
};

using Reports = std::vector<LawReport>;

void append(Reports& into, Reports more) {
  for (auto& r : more) into.push_back(std::move(r));
}

template <class T>
void apply_tolerance(Equality<T>& eq, const RunOptions& o) {
  if (o.tolerance && eq.kind == Comparison::approximate) eq.tolerance = *o.tolerance;
}

enum Suites : unsigned {
  axioms = 1u,
  properties = 2u,
  affine = 4u,
  injectivity = 8u,
  all_space = axioms | properties | affine | injectivity,
  // Candidate spaces that are designed to miss axioms: the consequences
  // of the axioms are not meaningful there.
  candidate = axioms | affine | injectivity,
};

template <class S, class P>
Reports space_suite(MobiSpace<S, P> sp, const RunOptions& o, unsigned suites) {
  apply_tolerance(sp.eq, o);
  apply_tolerance(sp.algebra.eq, o);
  const auto& s = o.sampling;
  Reports out;
  if (suites & axioms) append(out, check_space(sp, s));
  if (suites & properties) append(out, check_space_properties(sp, s));
  if (suites & affine) {
    out.push_back(check_affine(sp, s));
    out.push_back(check_strong_affine(sp, s));
  }
  if (suites & injectivity) out.push_back(check_injectivity_conjecture(sp, s));
  return out;
}

template <class S>
Reports algebra_suite(MobiAlgebra<S> alg, const RunOptions& o) {
  apply_tolerance(alg.eq, o);
  Reports out = check_algebra(alg, o.sampling);
  append(out, check_derived(alg, o.sampling));
  out.push_back(check_double_complement(alg, o.sampling));
  return out;
}

template <class P>
P point_from(const std::vector<Rational>& c) {
  if constexpr (std::is_same_v<P, double>) {
    if (c.size() != 1) throw ConfigurationError("expected a single coordinate");
    return to_double(c[0]);
  } else {
    P out;
    for (const auto& v : c) out.push_back(to_double(v));
    return out;
  }
}

// Converts angles stored in units of pi to radians for output.
void radians_first(std::vector<TraceRow>& rows) {
  const double pi = std::acos(-1.0);
  for (auto& r : rows) r.position[0] *= pi;
}

template <class P>
std::vector<TraceRow> closed_form_trace(const MobiSpace<double, P>& sp, const std::string& from, const std::string& to,
                                        int resolution) {
  if (resolution < 2) throw ConfigurationError("trace resolution must be at least 2");
  const P x = point_from<P>(parse_point(from));
  const P y = point_from<P>(parse_point(to));
  if (!sp.points.has(x) || !sp.points.has(y)) throw ConfigurationError("trace endpoints must lie in " + sp.points.name);
  std::vector<TraceRow> rows;
  for (int i = 0; i < resolution; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
    rows.push_back({t, coordinates(sp.at(x, t, y)), {}});
  }
  return rows;
}

template <bool ExactOk, class Build>
CatalogEntry space_entry(std::string id, std::string kind, std::string summary, std::set<std::string> failures,
                         Build build, unsigned suites) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = std::move(kind);
  e.summary = std::move(summary);
  if constexpr (ExactOk) e.backends = {Backend::exact, Backend::approx};
  else e.backends = {Backend::approx};
  e.expected_failures = std::move(failures);
  e.verify = [build, suites](Backend b, const RunOptions& o) -> Reports {
    if constexpr (ExactOk) {
      if (b == Backend::exact) return space_suite(build(Tag<Rational>{}), o, suites);
    }
    return space_suite(build(Tag<double>{}), o, suites);
  };
  e.trace = [build](const std::string& from, const std::string& to, int resolution,
                    const RunOptions&) -> std::vector<TraceRow> {
    const auto sp = build(Tag<double>{});
    using Space = std::decay_t<decltype(sp)>;
    if constexpr (std::is_same_v<typename Space::Scalar, double>) {
      return closed_form_trace(sp, from, to, resolution);
    } else {
      throw ConfigurationError(sp.name + ": traces need a space over the unit interval");
    }
  };
  return e;
}

template <class Build>
CatalogEntry algebra_entry(std::string id, std::string summary, std::vector<Backend> backends, Build build) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = "algebra";
  e.summary = std::move(summary);
  e.backends = std::move(backends);
  e.verify = [build](Backend b, const RunOptions& o) -> Reports { return build(b, o); };
  return e;
}

long parse_long(const std::string& text, const std::string& id) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') throw ConfigurationError("bad integer '" + text + "' in '" + id + "'");
  return v;
}

double parse_real(const std::string& text, const std::string& id) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v))
    throw ConfigurationError("bad number '" + text + "' in '" + id + "'");
  return v;
}

Rational parse_exact(const std::string& text, const std::string& id) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw ConfigurationError("bad rational '" + text + "' in '" + id + "'");
  }
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// ---------------------------------------------------------------- bridge

template <class S, class P>
std::string add_phi_sample(const RingModule<S, P>& m, const P& x, const P& y, const S& a) {
  std::string out = "{\"x\":" + json_text(x) + ",\"y\":" + json_text(y) + ",\"a\":" + json_text(a);
  auto field = [&](const char* name, auto&& compute) {
    out += ",\"";
    out += name;
    out += "\":";
    try {
      out += json_text(compute());
    } catch (const Error& err) {
      out += "null";
    }
  };
  field("x+y", [&] { return m.add(x, y); });
  field("phi_a(x)", [&] { return m.phi(a, x); });
  field("-x", [&] { return m.neg(x); });
  out += '}';
  return out;
}

template <class S>
Vec<S> pick_basepoint(const BridgeOptions& bo, std::size_t dim) {
  if (!bo.basepoint) return Vec<S>(dim, ratio<S>(0));
  const auto c = parse_point(*bo.basepoint);
  if (c.size() != dim) throw ConfigurationError("basepoint needs " + std::to_string(dim) + " coordinates");
  Vec<S> out;
  for (const auto& v : c) out.push_back(from_rational<S>(v));
  return out;
}

template <class S>
void bridge_tolerance(MobiSpace<S, Vec<S>>& sp, const RunOptions& o) {
  apply_tolerance(sp.eq, o);
  apply_tolerance(sp.algebra.eq, o);
}

// Affine spaces with a known module: round-trips, module laws, pivot identity,
// plus agreement with the expected module when one is supplied.
template <class S>
BridgeResult affine_bridge(MobiSpace<S, Vec<S>> sp, const RingModule<S, Vec<S>>& known, const BridgeOptions& bo,
                           const RunOptions& o, const std::string& formula_law) {
  bridge_tolerance(sp, o);
  const auto& s = o.sampling;
  const Vec<S> e = pick_basepoint<S>(bo, sp.points.anchors.front().size());
  BridgeResult r;
  if (bo.pseudo) {
    const auto pm = extract_pseudo_module(sp, e);
    append(r.reports, check_pseudo_module_laws(pm, s));
  }
  if (bo.roundtrip || !bo.pseudo) {
    RingModule<S, Vec<S>> m;
    try {
      m = module_from_space(sp, e, s);
    } catch (const RefusedConversion& refused) {
      r.refusal = refused.report_json();
      return r;
    }
    append(r.reports, check_module_laws(m, s));
    r.reports.push_back(check_midpoint_pivot(sp, m, s));
    r.reports.push_back(roundtrip_space(sp, e, s));
    auto km = known;
    km.eq = sp.eq;
    r.reports.push_back(roundtrip_module(km, s));
    if (!formula_law.empty() && !bo.basepoint) {
      auto xy = sample_tuples(s, "formula", sp.points, sp.points);
      auto ax = sample_tuples(s, "formula-phi", sp.algebra.carrier, sp.points);
      r.reports.push_back(merge_reports(
          formula_law,
          {run_law<Vec<S>>("add", xy, {"x", "y"}, sp.eq, s,
                           [&](const Vec<S>& x, const Vec<S>& y) -> Outcome<Vec<S>> {
                             return equation(m.add(x, y), known.add(x, y));
                           }),
           run_law<Vec<S>>("phi", ax, {"a", "x"}, sp.eq, s,
                           [&](const S& a, const Vec<S>& x) -> Outcome<Vec<S>> {
                             return equation(m.phi(a, x), known.phi(a, x));
                           })},
          s.max_witnesses));
    }
    const auto& A = sp.points.anchors;
    for (std::size_t i = 0; i + 1 < A.size(); ++i) r.samples.push_back(add_phi_sample(m, A[i], A[i + 1], ratio<S>(2)));
  }
  return r;
}

template <class S>
BridgeResult cube_bridge(const BridgeOptions& bo, const RunOptions& o) {
  auto sp = cube_space_for_bridge<S>();
  bridge_tolerance(sp, o);
  const auto& s = o.sampling;
  const Vec<S> e = pick_basepoint<S>(bo, 2);
  BridgeResult r;
  if (bo.roundtrip || !bo.pseudo) {
    try {
      (void)module_from_space(sp, e, s);
    } catch (const RefusedConversion& refused) {
      r.refusal = refused.report_json();
    }
  }
  if (bo.pseudo) {
    const auto pm = extract_pseudo_module(sp, e);
    append(r.reports, check_pseudo_module_laws(pm, s));
    if (!bo.basepoint) {
      // Agreement with the closed forms where they apply: x1, y1, x1 + y1 nonzero.
      auto xy = sample_tuples(s, "cube-formula", sp.points, sp.points);
      auto ax = sample_tuples(s, "cube-formula-phi", sp.algebra.carrier, sp.points);
      r.reports.push_back(merge_reports(
          "bridge.pseudo.cube_formulas",
          {run_law<Vec<S>>("add", xy, {"x", "y"}, sp.eq, s,
                           [&](const Vec<S>& x, const Vec<S>& y) -> Outcome<Vec<S>> {
                             if (x[0] == 0 || y[0] == 0 || x[0] + y[0] == 0) return std::nullopt;
                             return equation(pm.add(x, y), cube_pseudo_add(x, y));
                           }),
           run_law<Vec<S>>("phi", ax, {"a", "x"}, sp.eq, s,
                           [&](const S& a, const Vec<S>& x) -> Outcome<Vec<S>> {
                             return equation(pm.phi(a, x), cube_pseudo_phi(a, x));
                           })},
          s.max_witnesses));
    }
    // Associativity witness and the x1 = y1 = 0 line.
    using detail::vec;
    r.samples.push_back(add_phi_sample<S, Vec<S>>(pm, vec<S>({{1, 1}, {2, 1}}), vec<S>({{2, 1}, {-1, 1}}), ratio<S>(1, 2)));
    r.samples.push_back(add_phi_sample<S, Vec<S>>(pm, vec<S>({{0, 1}, {3, 1}}), vec<S>({{0, 1}, {5, 1}}), ratio<S>(2)));
    const Vec<S> a = vec<S>({{1, 1}, {2, 1}}), b = vec<S>({{2, 1}, {-1, 1}}), c = vec<S>({{3, 1}, {1, 1}});
    r.samples.push_back("{\"(x+y)+z\":" + json_text(pm.add(pm.add(a, b), c)) +
                        ",\"x+(y+z)\":" + json_text(pm.add(a, pm.add(b, c))) + ",\"x\":" + json_text(a) +
                        ",\"y\":" + json_text(b) + ",\"z\":" + json_text(c) + "}");
  }
  return r;
}

// ---------------------------------------------------------------- lozenge

template <class S>
Reports lozenge_suite(int h, const RunOptions& o) {
  auto sp = lozenge_space<S>(h);
  Reports out = space_suite(sp, o, all_space);
  out.push_back(check_lozenge_phi_homomorphism<S>(ratio<S>(h), o.sampling));
  const auto via_phi = lozenge_space_from_phi<S>(ratio<S>(h));
  auto tuples = sample_tuples(o.sampling, "lozenge-construction", sp.points, sp.algebra.carrier, sp.points);
  auto eq = sp.eq;
  apply_tolerance(eq, o);
  out.push_back(run_law<S>("lozenge.phi_construction", tuples, {"x", "a", "y"}, eq, o.sampling,
                           [&](const S& x, const LozengeScalar<S>& a, const S& y) -> Outcome<S> {
                             return equation(sp.q(x, a, y), via_phi.q(x, a, y));
                           }));
  return out;
}

// ---------------------------------------------------------------- quotient

template <class S>
Reports quotient_suite(CylinderLift lift, const RunOptions& o) {
  auto qd = cylinder_quotient<S>(lift);
  apply_tolerance(qd.target_eq, o);
  apply_tolerance(qd.base.eq, o);
  Reports out = check_quotient_conditions(qd, o.sampling);
  out.push_back(check_cylinder_shortest_path(qd, o.sampling));
  MobiSpace<S, Vec<S>> sp;
  try {
    sp = quotient_space(qd, o.sampling);
  } catch (const ConstructionError&) {
    return out;  // the failing condition is already in the reports
  }
  append(out, space_suite(sp, o, all_space));
  auto tuples = sample_tuples(o.sampling, "quotient-literal", qd.target, sp.algebra.carrier, qd.target);
  out.push_back(run_law<Vec<S>>("quotient.defining_equation", tuples, {"u", "a", "v"}, sp.eq, o.sampling,
                                [&](const Vec<S>& u, const S& a, const Vec<S>& v) -> Outcome<Vec<S>> {
                                  return equation(sp.q(u, a, v), qd.h(qd.base.q(qd.s(u), a, qd.theta(u, v))));
                                }));
  return out;
}

// ---------------------------------------------------------------- fields

double space_tolerance(const RunOptions& o) {
  if (o.tolerance) return *o.tolerance;
  return std::max(1e-6, 10.0 * o.shooting.residual_tolerance);
}

Reports field_suite(const GeodesicField& field, const RunOptions& o,
                    const std::function<Reports(const MobiSpace<double, Vector>&, const RunOptions&)>& oracle) {
  const double tol = space_tolerance(o);
  Reports out;
  out.push_back(check_homogeneity(field, o.sampling));
  const auto sp = geodesic_space(field, o.integrator, o.shooting, tol);
  RunOptions inner = o;
  inner.tolerance = tol;
  append(out, space_suite(sp, inner, all_space));
  append(out, verify_flow_identities(field, o.sampling, o.integrator, o.shooting, tol));
  out.push_back(check_velocity_cancellation(field, o.sampling, o.integrator, tol));
  if (oracle) append(out, oracle(sp, inner));
  return out;
}

// q of a geodesic space against a closed-form space on sampled tuples;
// `keep` filters tuples (e.g. distinct times for time-augmented fields).
Reports closed_form_oracle(const MobiSpace<double, Vector>& sp, const MobiSpace<double, Vector>& reference,
                           const RunOptions& o, const std::function<bool(const Vector&, const Vector&)>& keep = {}) {
  auto tuples = sample_tuples(o.sampling, "closed-form", sp.points, sp.algebra.carrier, sp.points);
  return {run_law<Vector>("oracle.closed_form", tuples, {"x", "t", "y"}, sp.eq, o.sampling,
                          [&](const Vector& x, const double& t, const Vector& y) -> Outcome<Vector> {
                            if (keep && !keep(x, y)) return std::nullopt;
                            return equation(sp.q(x, t, y), reference.q(x, t, y));
                          })};
}

CatalogEntry field_entry(std::string id, std::string summary, std::function<GeodesicField()> make,
                         std::function<Reports(const MobiSpace<double, Vector>&, const RunOptions&)> oracle = {}) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = "field";
  e.summary = std::move(summary);
  e.backends = {Backend::approx};
  e.verify = [make, oracle](Backend, const RunOptions& o) { return field_suite(make(), o, oracle); };
  e.trace = [make](const std::string& from, const std::string& to, int resolution, const RunOptions& o) {
    const auto field = make();
    const Vector x = point_from<Vector>(parse_point(from));
    const Vector y = point_from<Vector>(parse_point(to));
    if (!field.points.has(x) || !field.points.has(y) || !field.inside(x) || !field.inside(y))
      throw ConfigurationError("trace endpoints must lie in the domain of " + field.name);
    return trace_geodesic(field, x, y, resolution, o.integrator, o.shooting);
  };
  return e;
}

// The interchange laws pair points of equal time (e.g. q(x1,1/2,x2) with x1, x2 at t = 0),
// which a time-augmented field rejects as singular.
std::set<std::string> same_time_failures() { return {"affine.midpoint_interchange", "affine.strong_interchange"}; }

CatalogEntry build_entry(const std::string& id) {
  using detail::vec;
  const std::set<std::string> none;

  // -------------------------------------------------------------- algebras
  if (id == "interval-algebra")
    return algebra_entry(id, "[0,1] with p(a,b,c) = a + bc - ba", {Backend::exact, Backend::approx},
                         [](Backend b, const RunOptions& o) {
                           return b == Backend::exact ? algebra_suite(interval_algebra<Rational>(), o)
                                                      : algebra_suite(interval_algebra<double>(), o);
                         });
  if (id == "line-algebra")
    return algebra_entry(id, "the whole line with p(a,b,c) = a + bc - ba (contains 2)",
                         {Backend::exact, Backend::approx}, [](Backend b, const RunOptions& o) {
                           return b == Backend::exact ? algebra_suite(line_algebra<Rational>(), o)
                                                      : algebra_suite(line_algebra<double>(), o);
                         });
  if (id == "lozenge-algebra")
    return algebra_entry(id, "{(t1,t2): |t2| <= t1 <= 1-|t2|} with the two-component operation",
                         {Backend::exact, Backend::approx}, [](Backend b, const RunOptions& o) {
                           return b == Backend::exact ? algebra_suite(lozenge_algebra<Rational>(), o)
                                                      : algebra_suite(lozenge_algebra<double>(), o);
                         });
  for (const char* family : {"ring:Z", "endo:Z", "midpoint-endo:Z"}) {
    if (!starts_with(id, family)) continue;
    const std::string fam = family;
    const int n = static_cast<int>(parse_long(id.substr(fam.size()), id));
    if (fam == "ring:Z") {
      auto alg = ring_algebra(modular_ring(n));  // throws for even n
      return algebra_entry(id, "integers mod " + std::to_string(n) + " as a ring with 1/2", {Backend::exact},
                           [alg](Backend, const RunOptions& o) { return algebra_suite(alg, o); });
    }
    if (fam == "endo:Z") {
      auto alg = endo_algebra(n);
      return algebra_entry(id, "endomorphisms of Z_" + std::to_string(n) + " with p = f - gf + gh",
                           {Backend::exact}, [alg](Backend, const RunOptions& o) { return algebra_suite(alg, o); });
    }
    auto alg = midpoint_endo_algebra(n);
    return algebra_entry(id, "midpoint-preserving maps of Z_" + std::to_string(n) + " fixing 0",
                         {Backend::exact}, [alg](Backend, const RunOptions& o) { return algebra_suite(alg, o); });
  }

  // -------------------------------------------------------------- spaces
  if (starts_with(id, "euclidean:")) {
    const int n = static_cast<int>(parse_long(id.substr(10), id));
    if (n < 1) throw DomainError("euclidean space needs dimension >= 1");
    auto e = space_entry<true>(
        id, "space", "R^" + std::to_string(n) + " with q(x,t,y) = (1-t)x + ty", none,
        [n](auto tag) { return euclidean_space<typename decltype(tag)::type>(n); }, all_space);
    e.default_basepoint = "origin";
    e.bridge = [n](Backend b, const BridgeOptions& bo, const RunOptions& o) {
      if (b == Backend::exact)
        return affine_bridge(euclidean_space<Rational>(n, line_algebra<Rational>()), vector_module<Rational>(n), bo, o,
                             "bridge.vector_formulas");
      return affine_bridge(euclidean_space<double>(n, line_algebra<double>()), vector_module<double>(n), bo, o,
                           "bridge.vector_formulas");
    };
    return e;
  }
  if (id == "ftransform:log")
    return space_entry<false>(
        id, "space", "(0,inf) with q = x^(1-t) y^t", none, [](auto) { return log_transform_space(); }, all_space);
  if (id == "ftransform:inverse")
    return space_entry<true>(
        id, "space", "(0,inf) with q = xy / (tx + (1-t)y)", none,
        [](auto tag) { return reciprocal_transform_space<typename decltype(tag)::type>(); }, all_space);
  if (id == "ftransform:identity")
    return space_entry<true>(
        id, "space", "R with F = identity", none,
        [](auto tag) { return identity_transform_space<typename decltype(tag)::type>(); }, all_space);
  if (id == "graph:f=inverse")
    return space_entry<true>(
        id, "space", "graph family with f(x) = 1/x on (0,inf) x R", none,
        [](auto tag) { return graph_inverse_space<typename decltype(tag)::type>(); }, all_space);
  if (id == "graph:f=square")
    return space_entry<true>(
        id, "space", "graph family with f(x) = x^2 on (0,inf) x R (not affine)",
        {"affine.midpoint_interchange", "affine.strong_interchange"},
        [](auto tag) { return graph_square_space<typename decltype(tag)::type>(); }, all_space);
  if (id == "graph:f=cube") {
    auto e = space_entry<true>(
        id, "space", "graph family with f(x) = x^3 on R^2 (not affine)",
        {"affine.midpoint_interchange", "affine.strong_interchange"},
        [](auto tag) { return graph_cube_space<typename decltype(tag)::type>(); }, all_space);
    e.default_basepoint = "origin";
    e.bridge_refusal_expected = true;
    e.bridge_expected_failures = {"bridge.pseudo.associativity", "bridge.pseudo.reconstruction_X5"};
    e.bridge = [](Backend b, const BridgeOptions& bo, const RunOptions& o) {
      return b == Backend::exact ? cube_bridge<Rational>(bo, o) : cube_bridge<double>(bo, o);
    };
    return e;
  }
  if (id == "cylinder:chart=symmetric" || id == "cylinder:chart=positive") {
    const auto chart = id == "cylinder:chart=symmetric" ? CylinderChart::symmetric : CylinderChart::positive;
    auto e = space_entry<true>(
        id, "space",
        chart == CylinderChart::symmetric ? "cylinder chart (-pi,pi] x R, angles in units of pi"
                                          : "cylinder chart [0,2pi) x R, angles in units of pi",
        none, [chart](auto tag) { return cylinder_chart_space<typename decltype(tag)::type>(chart); }, all_space);
    auto inner = e.trace;
    e.trace = [inner](const std::string& from, const std::string& to, int resolution, const RunOptions& o) {
      auto rows = inner(from, to, resolution, o);
      radians_first(rows);
      return rows;
    };
    return e;
  }
  if (starts_with(id, "projectile:k=")) {
    const Rational k = parse_exact(id.substr(13), id);
    auto e = space_entry<true>(
        id, "space", "projectile ((1-t)x1 + ty1 + k(y2-x2)^2(1-t)t, (1-t)x2 + ty2)", none,
        [k](auto tag) {
          using S = typename decltype(tag)::type;
          return projectile_space<S>(from_rational<S>(k));
        },
        all_space);
    e.default_basepoint = "origin";
    e.bridge = [k](Backend b, const BridgeOptions& bo, const RunOptions& o) {
      if (b == Backend::exact)
        return affine_bridge(projectile_space<Rational>(k, line_algebra<Rational>()), projectile_module<Rational>(k),
                             bo, o, "bridge.projectile_formulas");
      const double kd = to_double(k);
      return affine_bridge(projectile_space<double>(kd, line_algebra<double>()), projectile_module<double>(kd), bo, o,
                           "bridge.projectile_formulas");
    };
    return e;
  }
  if (starts_with(id, "oscillator:k=")) {
    const double k = parse_real(id.substr(13), id);
    return space_entry<false>(
        id, "space", "critically damped oscillator (position, time)", none, [k](auto) { return oscillator_space(k); },
        all_space);
  }
  if (starts_with(id, "lozenge-space:h=")) {
    const int h = static_cast<int>(parse_long(id.substr(16), id));
    (void)lozenge_space<double>(h);  // rejects |h| != 1
    CatalogEntry e = space_entry<true>(
        id, "space", "[0,1] over the lozenge algebra, q = (1-t-hs)x + (t+hs)y", {"diagnostic.injectivity"},
        [h](auto tag) { return lozenge_space<typename decltype(tag)::type>(h); }, all_space);
    e.verify = [h](Backend b, const RunOptions& o) {
      return b == Backend::exact ? lozenge_suite<Rational>(h, o) : lozenge_suite<double>(h, o);
    };
    return e;
  }
  if (id == "counterexample:tsquare")
    return space_entry<true>(
        id, "counterexample", "q(x,t,y) = x + t^2(y-x): misses the homomorphism axiom", {"X5.homomorphism"},
        [](auto tag) { return counterexample_tsquare<typename decltype(tag)::type>(); }, candidate);
  if (starts_with(id, "counterexample:projectile1d:k=")) {
    const Rational k = parse_exact(id.substr(30), id);
    std::set<std::string> fails;
    if (k != 0) fails = {"X3.idempotency", "X5.homomorphism", "diagnostic.injectivity"};
    return space_entry<true>(
        id, "counterexample", "q(x,t,y) = (1-t)x + ty + k(1-t)t: a projectile without its time coordinate", fails,
        [k](auto tag) {
          using S = typename decltype(tag)::type;
          return counterexample_1d_projectile<S>(from_rational<S>(k));
        },
        candidate);
  }

  // -------------------------------------------------------------- quotients
  if (id == "quotient:cylinder" || id == "quotient:cylinder-unlifted") {
    const auto lift = id == "quotient:cylinder" ? CylinderLift::shortest : CylinderLift::none;
    CatalogEntry e;
    e.id = id;
    e.kind = "quotient";
    e.summary = lift == CylinderLift::shortest
                    ? "cylinder [0,2pi) x R as a quotient of the plane, shortest lift (angles in units of pi)"
                    : "cylinder quotient with the identity lift theta(u,v) = v";
    e.backends = {Backend::exact, Backend::approx};
    if (lift == CylinderLift::shortest)
      e.expected_failures = {"affine.midpoint_interchange", "affine.strong_interchange"};
    else
      e.expected_failures = {"quotient.shortest_path"};
    e.verify = [lift](Backend b, const RunOptions& o) {
      return b == Backend::exact ? quotient_suite<Rational>(lift, o) : quotient_suite<double>(lift, o);
    };
    e.trace = [lift](const std::string& from, const std::string& to, int resolution, const RunOptions& o) {
      const auto sp = quotient_space(cylinder_quotient<double>(lift), o.sampling);
      auto rows = closed_form_trace(sp, from, to, resolution);
      radians_first(rows);
      return rows;
    };
    return e;
  }

  // -------------------------------------------------------------- fields
  if (starts_with(id, "geodesic:flat:")) {
    const int n = static_cast<int>(parse_long(id.substr(14), id));
    if (n < 1) throw DomainError("field dimension must be positive");
    return field_entry(id, "g = 0 on R^" + std::to_string(n), [n] { return flat_field(n); });
  }
  if (starts_with(id, "geodesic:projectile:k=")) {
    const double k = parse_real(id.substr(22), id);
    return field_entry(id, "g((x1,x2),(w1,w2)) = (-2k w2^2, 0)", [k] { return projectile_field(k); },
                       [k](const MobiSpace<double, Vector>& sp, const RunOptions& o) {
                         return closed_form_oracle(sp, projectile_space<double>(k), o);
                       });
  }
  if (id == "geodesic:polar")
    return field_entry(id, "Christoffel symbols of the plane in polar coordinates (r, theta)", [] { return polar_field(); });
  if (id == "geodesic:log-line")
    return field_entry(id, "Christoffel symbol Gamma = 1 on R: x'' = -x'^2", [] { return log_line_field(); });
  if (starts_with(id, "time-augmented:projectile:k=")) {
    const double k = parse_real(id.substr(28), id);
    auto e = field_entry(id, "time-augmented field with f = -2k", [k] { return time_augmented_projectile(k); },
                       [k](const MobiSpace<double, Vector>& sp, const RunOptions& o) {
                         return closed_form_oracle(sp, projectile_space<double>(k), o);
                       });
    e.expected_failures = same_time_failures();
    return e;
  }
  if (starts_with(id, "time-augmented:oscillator:k=")) {
    const double k = parse_real(id.substr(28), id);
    auto e = field_entry(id, "time-augmented field with f = -k^2 x - 2k x'", [k] { return time_augmented_oscillator(k); },
                       [k](const MobiSpace<double, Vector>& sp, const RunOptions& o) {
                         return closed_form_oracle(sp, oscillator_space(k), o,
                                                   [](const Vector& x, const Vector& y) {
                                                     return std::fabs(y[1] - x[1]) >= 0.1;
                                                   });
                       });
    e.expected_failures = same_time_failures();
    return e;
  }
  throw ConfigurationError("unknown instance '" + id + "' (see `list`)");
}

}  // namespace

CatalogEntry lookup(const std::string& id) {
  CatalogEntry e = build_entry(id);
  e.id = id;
  return e;
}

std::vector<std::string> catalog_ids() {
  return {"interval-algebra",
          "line-algebra",
          "lozenge-algebra",
          "ring:Z9",
          "endo:Z9",
          "midpoint-endo:Z5",
          "midpoint-endo:Z9",
          "euclidean:1",
          "euclidean:2",
          "euclidean:3",
          "ftransform:log",
          "ftransform:inverse",
          "ftransform:identity",
          "graph:f=inverse",
          "graph:f=square",
          "graph:f=cube",
          "cylinder:chart=symmetric",
          "cylinder:chart=positive",
          "projectile:k=-1",
          "projectile:k=0",
          "projectile:k=1",
          "projectile:k=2",
          "oscillator:k=0",
          "oscillator:k=1",
          "lozenge-space:h=1",
          "lozenge-space:h=-1",
          "counterexample:tsquare",
          "counterexample:projectile1d:k=1",
          "quotient:cylinder",
          "quotient:cylinder-unlifted",
          "geodesic:flat:2",
          "geodesic:projectile:k=1",
          "geodesic:polar",
          "geodesic:log-line",
          "time-augmented:projectile:k=1",
          "time-augmented:oscillator:k=1"};
}

std::vector<std::string> profile_mismatches(const CatalogEntry& entry, const std::vector<LawReport>& reports) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& r : reports) {
    seen.insert(r.law);
    const bool expect_fail = entry.expected_failures.count(r.law) != 0;
    if (r.passed() == expect_fail) out.push_back(r.law);
  }
  for (const auto& law : entry.expected_failures)
    if (!seen.count(law)) out.push_back(law + " (not run)");
  return out;
}

std::vector<std::string> bridge_mismatches(const CatalogEntry& entry, const BridgeResult& result) {
  std::vector<std::string> out;
  for (const auto& r : result.reports) {
    const bool expect_fail = entry.bridge_expected_failures.count(r.law) != 0;
    if (r.passed() == expect_fail) out.push_back(r.law);
  }
  return out;
}

}  // namespace mobi
