#include <doctest.h>

#include <json.hpp>

#include "qpb/cli.hpp"

using namespace qpb;
using namespace qpb::cli;

namespace {

std::string fixture(const std::string& name) {
  for (const auto& [file, text] : fixture_documents())
    if (file == name) return text;
  FAIL("missing fixture " << name);
  return {};
}

}  // namespace

TEST_CASE("fixture documents parse") {
  const SpecDocument z2 = parse_spec(fixture("fix_z2.json"));
  CHECK(z2.group.order() == 2);
  CHECK(z2.action.size() == 4);
  CHECK(z2.connections.size() == 3);
  CHECK(z2.gauges.size() == 2);
  const SpecDocument prod = parse_spec(fixture("fix_prod.json"));
  CHECK(prod.product_base_size == 2);
  CHECK(prod.action.size() == 6);
  CHECK(parse_spec(fixture("fix_s3.json")).group.order() == 6);
  CHECK_FALSE(parse_spec(fixture("fix_nonfree.json")).trivialization.has_value());
}

TEST_CASE("diagnostics name the location") {
  const std::string good = fixture("fix_z2.json");
  auto doc = nlohmann::json::parse(good);
  doc["action"][3][1] = 7;
  const std::string bad = doc.dump();
  try {
    parse_spec(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "index out of range at action[3][1]");
    CHECK(e.location() == "action[3][1]");
  }
  CHECK_THROWS_WITH_AS(parse_spec("{\"format_version\": 1,"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_spec(R"({"format_version": 2})"), doctest::Contains("format_version"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_spec(R"({"format_version": 1, "group": {"mul": [[0]]}, "product": {"base_size": 1},
                     "connections": [{"name": "a", "kind": "gamma", "entries": [[0, 0, 0, "0.5"]]}]})"),
      doctest::Contains("connections[0].entries[0][3]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_spec(R"({"format_version": 1, "group": {"mul": [[0]]}, "product": {"base_size": 1},
                     "gauges": [{"name": "a", "tau_hat": [0]}, {"name": "a", "tau_hat": [0]}]})"),
      doctest::Contains("duplicate gauge name"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"format_version": 1, "group": {"mul": [[0]]}})"), ParseError);
}

TEST_CASE("scalar literals in documents") {
  const SpecDocument doc = parse_spec(
      R"({"format_version": 1, "group": {"mul": [[0, 1], [1, 0]]}, "product": {"base_size": 2},
          "connections": [{"name": "s", "kind": "gamma_hat",
                           "entries": [[0, 1, 1, "1/3+2/5i"], [0, 1, 0, "-1/3-2/5i"]]}]})");
  CHECK(doc.connections[0].density->at({0, 1, 1}) == Scalar::parse("1/3+2/5i"));
}

TEST_CASE("suite runs and report contract") {
  const std::string text = fixture("fix_z2.json");
  const SpecDocument doc = parse_spec(text);
  const RunReport r = run_checks(doc, default_suites(doc), input_digest(text));
  CHECK(r.exit_status() == 0);
  const std::string out = emit_text(r);
  CHECK(out.find("ALL CHECKS PASSED (" + std::to_string(r.report.size()) + " checks)") != std::string::npos);
  const Check& ex = r.report.at("exactness.restricted_map_surjective");
  CHECK(std::get<long long>(*ex.value("omega1_dim")) == 12);
  CHECK(std::get<long long>(*ex.value("horizontal_dim")) == 8);
  CHECK(std::get<bool>(*r.report.at("curvature:twisted.curvature_equals_via_gamma").value("nonzero")));
  CHECK(emit_json(r) == emit_json(run_checks(doc, default_suites(doc), input_digest(text))));
}

TEST_CASE("suite order is fixed") {
  const SpecDocument doc = parse_spec(fixture("fix_z2.json"));
  const RunReport r = run_checks(doc, {"curvature:twisted", "group", "freeness"});
  CHECK(r.suites == std::vector<std::string>{"group", "freeness", "curvature:twisted"});
  CHECK_THROWS_AS(run_checks(doc, {"connection:missing"}), ConfigurationError);
  CHECK_THROWS_AS(run_checks(doc, {"gauge:flip:missing"}), ConfigurationError);
  CHECK_THROWS_AS(run_checks(doc, {"nonsense"}), ConfigurationError);
}

TEST_CASE("non-free fixture fails freeness") {
  const std::string text = fixture("fix_nonfree.json");
  const RunReport r = run_checks(parse_spec(text), {"freeness"}, input_digest(text));
  CHECK(r.exit_status() == 1);
  CHECK(r.report.first_failure()->name == "freeness.free");
  CHECK(r.report.first_failure()->witness == "(0,g)");
  CHECK(emit_text(r).find("first failure: freeness.free") != std::string::npos);
}

TEST_CASE("digest is FNV-1a") {
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("a") == "af63dc4c8601ec8c");
}
