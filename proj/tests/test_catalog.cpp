#include <algorithm>
#include <set>
#include <string>

#include "mobi/catalog.hpp"
#include "mobi/instances/spaces.hpp"
#include "test_support.hpp"

using namespace mobi;
using mobi::test::q;

namespace {

RunOptions options(std::size_t count) {
  RunOptions o;
  o.sampling.count = count;
  return o;
}

bool is_geodesic(const CatalogEntry& e) { return e.kind == "field"; }

}  // namespace

TEST_CASE("identifiers") {
  const auto ids = catalog_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const auto& id : ids) {
    const auto e = lookup(id);
    CHECK(e.id == id);
    CHECK_FALSE(e.backends.empty());
    CHECK(static_cast<bool>(e.verify));
  }
  CHECK_THROWS_AS(lookup("euclidean"), ConfigurationError);
  CHECK_THROWS_AS(lookup("nonsense:1"), ConfigurationError);
  CHECK_THROWS_AS(lookup("euclidean:0"), DomainError);
  CHECK_THROWS_AS(lookup("lozenge-space:h=2"), DomainError);
  CHECK_THROWS_AS(lookup("endo:Z8"), ConstructionError);
  CHECK(lookup("projectile:k=3/2").id == "projectile:k=3/2");
  CHECK(lookup("euclidean:5").id == "euclidean:5");
}

TEST_CASE("parsing helpers") {
  CHECK(parse_point("1/2,-3,0.25") == std::vector<Rational>{q(1, 2), q(-3), q(1, 4)});
  CHECK_THROWS_AS(parse_point("1,,2"), ConfigurationError);
  CHECK_THROWS_AS(parse_point("x"), ConfigurationError);
  CHECK(parse_backend("exact") == Backend::exact);
  CHECK(parse_backend("approx") == Backend::approx);
  CHECK_THROWS_AS(parse_backend("fast"), ConfigurationError);
}

TEST_CASE("every closed-form entry matches its profile under each backend") {
  for (const auto& id : catalog_ids()) {
    const auto e = lookup(id);
    if (is_geodesic(e)) continue;
    for (const auto b : e.backends) {
      CAPTURE(id);
      CAPTURE(to_string(b));
      const auto reports = e.verify(b, options(120));
      CHECK(profile_mismatches(e, reports).empty());
      for (const auto& r : reports) mobi::test::check_report_schema(to_json(r));
    }
  }
}

TEST_CASE("geodesic entries match their profiles") {
  for (const auto& id : catalog_ids()) {
    const auto e = lookup(id);
    if (!is_geodesic(e)) continue;
    CAPTURE(id);
    CHECK(profile_mismatches(e, e.verify(Backend::approx, options(40))).empty());
  }
}

TEST_CASE("bridges match their profiles") {
  for (const auto& id : catalog_ids()) {
    const auto e = lookup(id);
    if (!e.bridge) continue;
    for (bool pseudo : {false, true}) {
      CAPTURE(id);
      CAPTURE(pseudo);
      BridgeOptions bo;
      bo.roundtrip = !pseudo;
      bo.pseudo = pseudo;
      const auto r = e.bridge(e.default_backend(), bo, options(120));
      CHECK(bridge_mismatches(e, r).empty());
      if (!pseudo) CHECK(r.refusal.has_value() == e.bridge_refusal_expected);
      for (const auto& s : r.samples) CHECK(nlohmann::json::parse(s).is_object());
    }
  }
  CHECK_FALSE(static_cast<bool>(lookup("interval-algebra").bridge));
}

TEST_CASE("the cube graph refuses the module conversion and yields a pseudo-module") {
  const auto e = lookup("graph:f=cube");
  REQUIRE(e.bridge);
  BridgeOptions bo;
  bo.roundtrip = true;
  const auto r = e.bridge(Backend::exact, bo, options(100));
  REQUIRE(r.refusal);
  CHECK(nlohmann::json::parse(*r.refusal)["verdict"] == "fail");
  // the classic interchange witness
  using QV = Vec<Rational>;
  const auto [lhs, rhs] = affine_sides(graph_cube_space<Rational>(), QV{q(0), q(0)}, QV{q(1), q(1)},
                                       QV{q(1), q(0)}, QV{q(0), q(0)}, q(1, 3));
  CHECK(lhs == QV{q(1, 2), q(19, 189)});
  CHECK(rhs == QV{q(1, 2), q(1, 12)});
  bo.pseudo = true;
  const auto p = e.bridge(Backend::exact, bo, options(100));
  CHECK_FALSE(find_report(p.reports, "bridge.pseudo.associativity")->passed());
}

TEST_CASE("traces") {
  const auto proj = lookup("geodesic:projectile:k=1");
  const auto rows = proj.trace("0,0", "0,1", 101, options(10));
  REQUIRE(rows.size() == 101);
  CHECK(rows[50].position[0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(rows[50].position[1] == doctest::Approx(0.5).epsilon(1e-9));

  const auto cyl = lookup("quotient:cylinder");
  const auto c = cyl.trace("7/4,0", "1/4,0", 101, options(10));
  CHECK(c[50].position[0] == doctest::Approx(0.0));
  CHECK(c[50].velocity.empty());
  for (const auto& row : c) {
    CHECK(row.position[0] >= 0.0);
    CHECK(row.position[0] < 2 * 3.141592653589794);
  }

  const auto same = lookup("projectile:k=1").trace("1/2,1", "1/2,1", 5, options(10));
  for (const auto& row : same) CHECK(row.position == std::vector<double>{0.5, 1.0});

  CHECK_THROWS_AS(proj.trace("0", "0,1", 11, options(10)), ConfigurationError);
}

TEST_CASE("verify output is deterministic") {
  const auto e = lookup("lozenge-algebra");
  const auto a = e.verify(Backend::exact, options(150));
  const auto b = e.verify(Backend::exact, options(150));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
}
