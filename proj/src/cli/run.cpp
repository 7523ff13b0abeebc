#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qpb/calculus.hpp"
#include "qpb/cli.hpp"
#include "qpb/hopf.hpp"

namespace qpb::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kFixedSuites{"group",     "action",     "comodule",
                                            "freeness",  "exactness",  "trivialization"};

struct SuiteKey {
  int category;  // position in the fixed order; connection 6, curvature 7, gauge 8
  int first;
  int second;
  friend auto operator<=>(const SuiteKey&, const SuiteKey&) = default;
};

int connection_index(const SpecDocument& doc, const std::string& name, const std::string& suite) {
  for (std::size_t i = 0; i < doc.connections.size(); ++i)
    if (doc.connections[i].name == name) return static_cast<int>(i);
  throw ConfigurationError("suite " + suite + " refers to undefined connection \"" + name + "\"");
}

SuiteKey classify(const SpecDocument& doc, const std::string& suite) {
  for (std::size_t i = 0; i < kFixedSuites.size(); ++i)
    if (suite == kFixedSuites[i]) return {static_cast<int>(i), 0, 0};
  const auto colon = suite.find(':');
  const std::string head = suite.substr(0, colon);
  if (colon != std::string::npos && (head == "connection" || head == "curvature"))
    return {head == "connection" ? 6 : 7, connection_index(doc, suite.substr(colon + 1), suite), 0};
  if (colon != std::string::npos && head == "gauge") {
    const auto second = suite.find(':', colon + 1);
    if (second == std::string::npos)
      throw ConfigurationError("gauge suites are named gauge:<gauge>:<connection>");
    const std::string gauge = suite.substr(colon + 1, second - colon - 1);
    int gi = -1;
    for (std::size_t i = 0; i < doc.gauges.size(); ++i)
      if (doc.gauges[i].name == gauge) gi = static_cast<int>(i);
    if (gi < 0) throw ConfigurationError("suite " + suite + " refers to undefined gauge \"" + gauge + "\"");
    return {8, gi, connection_index(doc, suite.substr(second + 1), suite)};
  }
  throw ConfigurationError("unknown suite \"" + suite + "\"");
}

const connection::TransitionMap* transition_of(const ConnectionSpec& c) {
  return c.g_hat ? &*c.g_hat : nullptr;
}

Report run_suite(const SpecDocument& doc, const SuiteKey& key,
                 std::size_t max_entries) {
  Report r;
  if (key.category == 0) {
    r = validate_group(doc.group);
    if (r.passed()) r.append(hopf::check_hopf_axioms(hopf::HopfAlgebra(doc.group)));
    return r;
  }
  if (key.category == 1) return validate_action(doc.group, doc.action);

  const bundle::Bundle b = build_bundle(doc, max_entries);
  switch (key.category) {
    case 2:
      return bundle::check_comodule_algebra(b);
    case 3:
      return bundle::check_freeness(b);
    case 4:
      return calculus::check_exactness(b);
    case 5: {
      if (!b.has_trivialization())
        throw ConfigurationError("no trivialization given and none exists for a non-free action");
      r = bundle::validate_trivialization(b);
      r.append(bundle::check_psi_isomorphism(b));
      r.append(bundle::check_convolution_identities(b));
      return r;
    }
    default:
      break;
  }

  const ConnectionSpec& c = doc.connections[key.category == 8 ? key.second : key.first];
  const connection::ConnectionForm theta = resolve_connection(b, c);
  if (key.category == 6) {
    r = connection::check_connection(b, theta);
    if (c.kind == ConnectionKind::gamma_hat) {
      r.add("strong_closed_form", connection::strong_connection_closed_form(b, *c.density) == theta);
    } else if (c.kind == ConnectionKind::classical) {
      const auto gamma_hat = connection::gamma_hat_from_transition(b.group(), *c.g_hat);
      r.add("classical_equals_strong",
            connection::connection_from_gamma(b, connection::strong_from_gamma_hat(b, gamma_hat)) == theta);
    }
    return r;
  }
  if (key.category == 7) return connection::check_curvature(b, theta, transition_of(c));

  const gauge::GaugeMap& tau = doc.gauges[key.first].tau;
  r = connection::check_gauge_transform(b, theta, tau, transition_of(c));
  r.append(gauge::check_automorphism(b.group(), gauge::xi_from_tau(b.group(), tau)), "xi_");
  return r;
}

std::string render_value(const ReportValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* flag = std::get_if<bool>(&v)) return *flag ? "true" : "false";
  return std::get<std::string>(v);
}

}  // namespace

bundle::Bundle build_bundle(const SpecDocument& doc, std::size_t max_entries) {
  bundle::Bundle b = doc.product_base_size ? bundle::make_product(*doc.product_base_size, doc.group)
                                           : bundle::Bundle(doc.group, doc.action);
  b.set_max_entries(max_entries);
  if (doc.trivialization) return b.with_trivialization(*doc.trivialization);
  if (b.is_free()) return b.with_trivialization(bundle::synthesize_trivialization(b));
  return b;
}

connection::ConnectionForm resolve_connection(const bundle::Bundle& b, const ConnectionSpec& c) {
  if (!b.has_trivialization())
    throw ConfigurationError("connection \"" + c.name + "\" needs a trivialization");
  switch (c.kind) {
    case ConnectionKind::theta:
      return *c.density;
    case ConnectionKind::gamma:
      return connection::connection_from_gamma(b, *c.density);
    case ConnectionKind::gamma_hat:
      return connection::connection_from_gamma(b, connection::strong_from_gamma_hat(b, *c.density));
    case ConnectionKind::classical:
      return connection::classical_connection(b, *c.g_hat);
  }
  throw ConfigurationError("unknown connection kind");
}

std::vector<std::string> default_suites(const SpecDocument& doc) {
  std::vector<std::string> out(kFixedSuites.begin(), kFixedSuites.end());
  const bundle::Bundle b = build_bundle(doc);
  if (!b.has_trivialization()) out.pop_back();
  for (const auto& c : doc.connections) out.push_back("connection:" + c.name);
  for (const auto& c : doc.connections) out.push_back("curvature:" + c.name);
  for (const auto& g : doc.gauges)
    for (const auto& c : doc.connections) out.push_back("gauge:" + g.name + ":" + c.name);
  return out;
}

RunReport run_checks(const SpecDocument& doc, const std::vector<std::string>& suites,
                     std::string digest, std::size_t max_entries) {
  std::vector<std::pair<SuiteKey, std::string>> ordered;
  for (const auto& s : suites) ordered.emplace_back(classify(doc, s), s);
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                ordered.end());

  RunReport out;
  out.input_digest = std::move(digest);
  for (const auto& [key, name] : ordered) {
    out.suites.push_back(name);
    try {
      out.report.append(run_suite(doc, key, max_entries), name + ".");
    } catch (const SizeLimitError&) {
      throw;
    } catch (const Error& e) {
      out.report.add(name + ".precondition", false, e.what());
    }
  }
  return out;
}

std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  os << "qpb " << r.tool_version << "  input fnv1a64:" << r.input_digest << "\n";
  std::string current;
  for (const auto& c : r.report.checks()) {
    const std::string suite = c.name.substr(0, c.name.find('.'));
    if (suite != current) {
      os << "[" << suite << "]\n";
      current = suite;
    }
    os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.data.empty()) {
      os << "  (";
      for (std::size_t i = 0; i < c.data.size(); ++i)
        os << (i ? ", " : "") << c.data[i].first << "=" << render_value(c.data[i].second);
      os << ")";
    }
    if (!c.passed && !c.witness.empty()) os << "  witness: " << c.witness;
    os << "\n";
  }
  const std::size_t total = r.report.size();
  if (const Check* f = r.report.first_failure()) {
    std::size_t failed = 0;
    for (const auto& c : r.report.checks()) failed += !c.passed;
    os << "FAILED " << failed << " of " << total << " checks; first failure: " << f->name;
    if (!f->witness.empty()) os << " (witness " << f->witness << ")";
    os << "\n";
  } else {
    os << "ALL CHECKS PASSED (" << total << " checks)\n";
  }
  return os.str();
}

std::string emit_json(const RunReport& r) {
  ordered_json root;
  root["tool"] = "qpb";
  root["version"] = r.tool_version;
  root["format_version"] = kFormatVersion;
  root["input_digest"] = "fnv1a64:" + r.input_digest;
  root["suites"] = r.suites;
  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : r.report.checks()) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) jc["witness"] = c.witness;
    ordered_json data = ordered_json::object();
    for (const auto& [k, v] : c.data) std::visit([&](const auto& x) { data[k] = x; }, v);
    jc["data"] = std::move(data);
    checks.push_back(std::move(jc));
    failed += !c.passed;
  }
  root["checks"] = std::move(checks);
  const Check* f = r.report.first_failure();
  root["summary"] = {{"checks", r.report.size()},
                     {"failed", failed},
                     {"status", f ? "fail" : "pass"},
                     {"first_failure", f ? ordered_json(f->name) : ordered_json(nullptr)}};
  root["exit_status"] = r.exit_status();
  return root.dump(2) + "\n";
}

std::string emit_curvature(const SpecDocument& doc, const std::string& name, bool json,
                           std::string digest, std::size_t max_entries) {
  const ConnectionSpec* c = doc.find_connection(name);
  if (!c) throw ConfigurationError("no connection named \"" + name + "\"");
  const bundle::Bundle b = build_bundle(doc, max_entries);
  const SpectralMap f = connection::curvature(b, resolve_connection(b, *c));
  const Func& d = f.density();
  std::vector<int> idx(d.rank());
  std::vector<std::pair<std::vector<int>, std::string>> entries;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (d[t].is_zero()) continue;
    d.unflatten(t, idx);
    entries.emplace_back(idx, d[t].str());
  }
  if (json) {
    ordered_json root;
    root["tool"] = "qpb";
    root["version"] = kToolVersion;
    root["input_digest"] = "fnv1a64:" + digest;
    root["connection"] = name;
    root["degree"] = f.degree();
    root["shape"] = d.shape();
    root["nonzero_entries"] = entries.size();
    ordered_json list = ordered_json::array();
    for (const auto& [i, v] : entries) {
      ordered_json e(i);
      e.push_back(v);
      list.push_back(std::move(e));
    }
    root["entries"] = std::move(list);
    return root.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "curvature of " << name << ": " << entries.size() << " nonzero entries\n";
  os << "# p p' p'' c value\n";
  for (const auto& [i, v] : entries)
    os << i[0] << " " << i[1] << " " << i[2] << " " << b.group().label(i[3]) << " " << v << "\n";
  return os.str();
}

}  // namespace qpb::cli
