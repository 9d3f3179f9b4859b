// Command-line front end for the law suites, geodesic traces and module conversions.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mobi/catalog.hpp"
#include "mobi/instances/spaces.hpp"

namespace {

using namespace mobi;

struct Common {
  std::string instance;
  std::uint64_t seed = SampleStrategy{}.seed;
  std::size_t samples = SampleStrategy{}.count;
  std::string backend;
  std::optional<double> tol;
  std::string out;
  int steps = IntegratorConfig{}.steps;
  double shoot_tol = ShootingConfig{}.residual_tolerance;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_instance = true) {
  if (with_instance) {
    cmd->add_option("instance-id", c.instance, "catalog identifier (same as --instance)");
    cmd->add_option("--instance", c.instance, "catalog identifier, see `list`")->envname("MOBI_INSTANCE");
  }
  cmd->add_option("--seed", c.seed, "sampling seed")->envname("MOBI_SEED");
  cmd->add_option("--samples", c.samples, "random tuples per law")->envname("MOBI_SAMPLES")->check(CLI::PositiveNumber);
  cmd->add_option("--backend", c.backend, "exact or approx (default: the entry's first backend)")
      ->envname("MOBI_BACKEND")
      ->check(CLI::IsMember({"exact", "approx"}));
  cmd->add_option("--tol", c.tol, "tolerance for approximate comparisons")->envname("MOBI_TOL")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out, "write output to this file instead of stdout")->envname("MOBI_OUT");
  cmd->add_option("--steps", c.steps, "RK4 steps per unit parameter")->envname("MOBI_STEPS")->check(CLI::PositiveNumber);
  cmd->add_option("--shoot-tol", c.shoot_tol, "shooting residual tolerance")
      ->envname("MOBI_SHOOT_TOL")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "threads per law (output does not depend on it)")
      ->envname("MOBI_WORKERS")
      ->check(CLI::PositiveNumber);
}

RunOptions run_options(const Common& c) {
  RunOptions o;
  o.sampling.seed = c.seed;
  o.sampling.count = c.samples;
  o.sampling.workers = c.workers;
  if (!c.backend.empty()) o.backend = parse_backend(c.backend);
  o.tolerance = c.tol;
  o.integrator.steps = c.steps;
  o.shooting.residual_tolerance = c.shoot_tol;
  return o;
}

Backend choose_backend(const CatalogEntry& e, const RunOptions& o) {
  const Backend b = o.backend.value_or(e.default_backend());
  if (std::find(e.backends.begin(), e.backends.end(), b) == e.backends.end())
    throw ConfigurationError(e.id + " has no " + to_string(b) + " backend");
  return b;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + json_string(items[i]);
  return out + "]";
}

// Output sink: the --out file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigurationError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void require_instance(const Common& c) {
  if (c.instance.empty()) throw ConfigurationError("an instance identifier is required (see `list`)");
}

int cmd_list(const Common& c) {
  Sink sink(c.out);
  for (const auto& id : catalog_ids()) {
    const CatalogEntry e = lookup(id);
    std::vector<std::string> backends;
    for (auto b : e.backends) backends.push_back(to_string(b));
    std::vector<std::string> fails(e.expected_failures.begin(), e.expected_failures.end());
    sink.stream() << "{\"id\":" << json_string(e.id) << ",\"kind\":" << json_string(e.kind)
                  << ",\"summary\":" << json_string(e.summary) << ",\"backends\":" << json_list(backends)
                  << ",\"expected_failures\":" << json_list(fails) << ",\"bridge\":" << (e.bridge ? "true" : "false")
                  << "}\n";
  }
  return 0;
}

int cmd_verify(const Common& c) {
  require_instance(c);
  const CatalogEntry e = lookup(c.instance);
  const RunOptions o = run_options(c);
  const Backend b = choose_backend(e, o);
  auto reports = e.verify(b, o);
  std::stable_sort(reports.begin(), reports.end(), [](const LawReport& x, const LawReport& y) { return x.law < y.law; });
  const auto mismatches = profile_mismatches(e, reports);

  Sink sink(c.out);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    sink.stream() << to_json(r) << '\n';
    if (!r.passed()) ++failed;
  }
  std::vector<std::string> fails(e.expected_failures.begin(), e.expected_failures.end());
  sink.stream() << "{\"summary\":{\"instance\":" << json_string(e.id) << ",\"backend\":\"" << to_string(b)
                << "\",\"seed\":" << c.seed << ",\"samples\":" << c.samples << ",\"laws\":" << reports.size()
                << ",\"failed\":" << failed << ",\"expected_failures\":" << json_list(fails)
                << ",\"mismatches\":" << json_list(mismatches)
                << ",\"profile_matched\":" << (mismatches.empty() ? "true" : "false") << "}}\n";
  return mismatches.empty() ? 0 : 1;
}

int cmd_trace(const Common& c, const std::string& from, const std::string& to, int resolution) {
  require_instance(c);
  const CatalogEntry e = lookup(c.instance);
  if (!e.trace) throw ConfigurationError(e.id + " is not a space or field");
  const RunOptions o = run_options(c);
  std::vector<TraceRow> rows;
  try {
    rows = e.trace(from, to, resolution, o);
  } catch (const ShootingFailure& err) {
    std::cerr << "mobi: " << err.what() << '\n';
    return 1;
  } catch (const FlowEscape& err) {
    std::cerr << "mobi: " << err.what() << " at parameter " << err.exit_parameter() << '\n';
    return 1;
  }
  Sink sink(c.out);
  write_trace_csv(sink.stream(), rows);
  return 0;
}

int cmd_bridge(const Common& c, bool roundtrip, bool pseudo, const std::optional<std::string>& basepoint) {
  require_instance(c);
  const CatalogEntry e = lookup(c.instance);
  if (!e.bridge) throw ConfigurationError(e.id + " has no module conversion");
  const RunOptions o = run_options(c);
  const Backend b = choose_backend(e, o);
  BridgeOptions bo;
  bo.roundtrip = roundtrip || !pseudo;
  bo.pseudo = pseudo;
  bo.basepoint = basepoint;
  BridgeResult r = e.bridge(b, bo, o);
  std::stable_sort(r.reports.begin(), r.reports.end(),
                   [](const LawReport& x, const LawReport& y) { return x.law < y.law; });

  auto mismatches = bridge_mismatches(e, r);
  if (bo.roundtrip && r.refusal.has_value() != e.bridge_refusal_expected)
    mismatches.push_back(r.refusal ? "module_from_space (unexpected refusal)" : "module_from_space (expected refusal)");

  Sink sink(c.out);
  if (r.refusal) sink.stream() << "{\"refused\":\"module_from_space\",\"affine_report\":" << *r.refusal << "}\n";
  for (const auto& s : r.samples) sink.stream() << "{\"sample\":" << s << "}\n";
  for (const auto& rep : r.reports) sink.stream() << to_json(rep) << '\n';
  std::vector<std::string> fails(e.bridge_expected_failures.begin(), e.bridge_expected_failures.end());
  sink.stream() << "{\"summary\":{\"instance\":" << json_string(e.id) << ",\"backend\":\"" << to_string(b)
                << "\",\"basepoint\":" << json_string(basepoint.value_or(e.default_basepoint))
                << ",\"refused\":" << (r.refusal ? "true" : "false") << ",\"laws\":" << r.reports.size()
                << ",\"expected_failures\":" << json_list(fails) << ",\"mismatches\":" << json_list(mismatches)
                << ",\"profile_matched\":" << (mismatches.empty() ? "true" : "false") << "}}\n";
  return mismatches.empty() ? 0 : 1;
}

// The designed failures, one line per counterexample with its first witness.
int cmd_counterexamples(const Common& c) {
  struct Row {
    const char* instance;
    const char* law;
  };
  const Row rows[] = {{"counterexample:tsquare", "X5.homomorphism"},
                      {"counterexample:projectile1d:k=1", "X3.idempotency"},
                      {"counterexample:projectile1d:k=1", "X5.homomorphism"},
                      {"graph:f=cube", "affine.midpoint_interchange"},
                      {"lozenge-space:h=-1", "diagnostic.injectivity"},
                      {"lozenge-space:h=1", "diagnostic.injectivity"}};
  const RunOptions o = run_options(c);
  Sink sink(c.out);
  bool all_reproduced = true;
  std::string cached_id;
  std::vector<LawReport> cached;
  for (const auto& row : rows) {
    if (cached_id != row.instance) {
      const CatalogEntry e = lookup(row.instance);
      cached = e.verify(choose_backend(e, o), o);
      cached_id = row.instance;
    }
    const LawReport* r = find_report(cached, row.law);
    const bool reproduced = r && !r->passed();
    all_reproduced = all_reproduced && reproduced;
    sink.stream() << "{\"instance\":" << json_string(row.instance) << ",\"law\":" << json_string(row.law)
                  << ",\"expected\":\"fail\",\"verdict\":\"" << (r ? to_string(r->verdict()) : "missing") << "\"";
    if (r) sink.stream() << ",\"violation_count\":" << r->violation_count << ",\"samples\":" << r->samples;
    if (r && !r->violations.empty()) {
      const auto& v = r->violations.front();
      sink.stream() << ",\"witness\":{\"inputs\":" << v.inputs << ",\"lhs\":" << v.lhs << ",\"rhs\":" << v.rhs << "}";
    }
    sink.stream() << "}\n";
  }

  // The fixed interchange witness for the cube graph, evaluated exactly.
  using QV = Vec<Rational>;
  const QV x1{0, 0}, x2{1, 1}, y1{1, 0}, y2{0, 0};
  const Rational a(1, 3);
  const auto [lhs, rhs] = affine_sides(graph_cube_space<Rational>(), x1, x2, y1, y2, a);
  const bool witnessed = lhs == QV{Rational(1, 2), Rational(19, 189)} && rhs == QV{Rational(1, 2), Rational(1, 12)};
  all_reproduced = all_reproduced && witnessed;
  sink.stream() << "{\"instance\":\"graph:f=cube\",\"law\":\"affine.midpoint_interchange\",\"expected\":\"fail\""
                << ",\"verdict\":\"" << (lhs == rhs ? "pass" : "fail") << "\",\"witness\":{\"inputs\":{\"x1\":"
                << json_text(x1) << ",\"x2\":" << json_text(x2) << ",\"y1\":" << json_text(y1) << ",\"y2\":"
                << json_text(y2) << ",\"a\":" << json_text(a) << "},\"lhs\":" << json_text(lhs)
                << ",\"rhs\":" << json_text(rhs) << "}}\n";
  return all_reproduced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobility algebras and spaces: law suites, geodesic traces, module conversions"};
  app.require_subcommand(1);

  Common list_opts, verify_opts, trace_opts, bridge_opts, cx_opts;
  auto* list = app.add_subcommand("list", "catalog identifiers with their expected-law profiles");
  list->add_option("--out", list_opts.out, "write output to this file")->envname("MOBI_OUT");

  auto* verify = app.add_subcommand("verify", "run the law suites of an instance (JSON lines)");
  add_common(verify, verify_opts);

  std::string from, to;
  int resolution = 101;
  auto* trace = app.add_subcommand("trace", "sample q(x, t, y) for t in [0, 1] as CSV");
  add_common(trace, trace_opts);
  trace->add_option("--from", from, "start point, comma-separated (angles in units of pi)")->required();
  trace->add_option("--to", to, "end point, comma-separated")->required();
  trace->add_option("--resolution", resolution, "number of rows")->envname("MOBI_RESOLUTION")->check(CLI::Range(2, 1000000));

  bool roundtrip = false, pseudo = false;
  std::optional<std::string> basepoint;
  auto* bridge = app.add_subcommand("bridge", "module <-> affine space conversions (JSON lines)");
  add_common(bridge, bridge_opts);
  bridge->add_flag("--roundtrip", roundtrip, "convert to a module and back, both directions");
  bridge->add_flag("--pseudo", pseudo, "extract + and phi without requiring affineness");
  bridge->add_option("--basepoint", basepoint, "basepoint e, comma-separated (default: origin)");

  auto* cx = app.add_subcommand("counterexamples", "reproduce the designed failures with witnesses");
  add_common(cx, cx_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*list) return cmd_list(list_opts);
    if (*verify) return cmd_verify(verify_opts);
    if (*trace) return cmd_trace(trace_opts, from, to, resolution);
    if (*bridge) return cmd_bridge(bridge_opts, roundtrip, pseudo, basepoint);
    if (*cx) return cmd_counterexamples(cx_opts);
  } catch (const ConfigurationError& e) {
    std::cerr << "mobi: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "mobi: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "mobi: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "mobi: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
