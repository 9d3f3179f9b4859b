#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mobi/geodesic.hpp"
#include "mobi/law_report.hpp"
#include "mobi/sampling.hpp"

namespace mobi {

enum class Backend { exact, approx };

const char* to_string(Backend b);
Backend parse_backend(const std::string& text);

struct RunOptions {
  SampleStrategy sampling;
  std::optional<Backend> backend;   // entry default when empty
  std::optional<double> tolerance;  // approximate comparisons only
  IntegratorConfig integrator;
  ShootingConfig shooting;
};

struct BridgeOptions {
  bool roundtrip = false;
  bool pseudo = false;
  std::optional<std::string> basepoint;  // entry default when empty
};

struct BridgeResult {
  std::vector<LawReport> reports;
  // Extracted operations at a few points, as JSON objects.
  std::vector<std::string> samples;
  std::optional<std::string> refusal;  // JSON of the failing affine report
};

// A catalogued algebra, space or field with its expected-law profile:
// every law not listed in expected_failures is expected to pass.
struct CatalogEntry {
  std::string id;
  std::string kind;  // algebra | space | field | quotient | counterexample
  std::string summary;
  std::vector<Backend> backends;
  std::set<std::string> expected_failures;

  std::function<std::vector<LawReport>(Backend, const RunOptions&)> verify;
  // Rows of t -> q(x, t, y) (or the shooting trace) for points given as "a,b,...".
  std::function<std::vector<TraceRow>(const std::string& from, const std::string& to, int resolution,
                                      const RunOptions&)>
      trace;
  // Module conversions; empty when the entry has no bridge.
  std::function<BridgeResult(Backend, const BridgeOptions&, const RunOptions&)> bridge;
  std::string default_basepoint;
  bool bridge_refusal_expected = false;
  std::set<std::string> bridge_expected_failures;

  Backend default_backend() const { return backends.front(); }
};

// Throws ConfigurationError for unknown identifiers; constructors may throw
// DomainError / ConstructionError for bad parameters.
CatalogEntry lookup(const std::string& id);

// The identifiers listed by `list` (parameterized families at their usual values).
std::vector<std::string> catalog_ids();

// Laws whose outcome differs from the profile.
std::vector<std::string> profile_mismatches(const CatalogEntry& entry, const std::vector<LawReport>& reports);
std::vector<std::string> bridge_mismatches(const CatalogEntry& entry, const BridgeResult& result);

// Comma-separated rationals ("1/2,-3,0.25").
std::vector<Rational> parse_point(const std::string& text);

}  // namespace mobi
