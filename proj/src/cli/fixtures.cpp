#include <json.hpp>

#include "qpb/cli.hpp"
#include "qpb/fixtures.hpp"

namespace qpb::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json group_json(const FiniteGroup& g) {
  ordered_json mul = ordered_json::array();
  for (int a = 0; a < g.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(std::move(row));
  }
  return {{"mul", mul}, {"identity", g.identity()}, {"labels", g.labels()}};
}

ordered_json action_json(const bundle::Bundle& b) {
  ordered_json act = ordered_json::array();
  for (int p = 0; p < b.total_size(); ++p) {
    ordered_json row = ordered_json::array();
    for (int a = 0; a < b.order(); ++a) row.push_back(b.act(p, a));
    act.push_back(std::move(row));
  }
  return act;
}

ordered_json sparse_json(const SpectralMap& m) {
  ordered_json out = ordered_json::array();
  const Func& d = m.density();
  std::vector<int> idx(d.rank());
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (d[t].is_zero()) continue;
    d.unflatten(t, idx);
    ordered_json e(idx);
    e.push_back(d[t].str());
    out.push_back(std::move(e));
  }
  return out;
}

ordered_json classical_json(const std::string& name, const connection::TransitionMap& g_hat) {
  ordered_json rows = ordered_json::array();
  for (int x = 0; x < g_hat.base_size; ++x) {
    ordered_json row = ordered_json::array();
    for (int y = 0; y < g_hat.base_size; ++y) row.push_back(g_hat(x, y));
    rows.push_back(std::move(row));
  }
  return {{"name", name}, {"kind", "classical"}, {"g_hat", rows}};
}

ordered_json header(const bundle::Bundle& b) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["group"] = group_json(b.group());
  return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::vector<std::pair<std::string, std::string>> fixture_documents() {
  std::vector<std::pair<std::string, std::string>> out;

  {
    const bundle::Bundle b = fixtures::z2();
    ordered_json doc = header(b);
    doc["action"] = action_json(b);
    doc["trivialization"] = b.trivialization();
    // A complex strong connection, exercising the non-real literal path.
    SpectralMap gamma_hat(2, 1, 2);
    gamma_hat.at({0, 1, 1}) = Scalar::parse("1/2+1/3i");
    gamma_hat.at({0, 1, 0}) = Scalar::parse("-1/2-1/3i");
    gamma_hat.at({1, 0, 1}) = Scalar::parse("-1/4");
    gamma_hat.at({1, 0, 0}) = Scalar::parse("1/4");
    doc["connections"] = {classical_json("twisted", fixtures::z2_transition()),
                          classical_json("flat", {2, {0, 1, 1, 0}}),
                          {{"name", "strong"}, {"kind", "gamma_hat"}, {"entries", sparse_json(gamma_hat)}}};
    doc["gauges"] = {{{"name", "flip"}, {"tau_hat", {1, 0}}}, {{"name", "global"}, {"tau_hat", {1, 1}}}};
    out.emplace_back("fix_z2.json", dump(doc));
  }
  {
    const bundle::Bundle b = fixtures::s3();
    ordered_json doc = header(b);
    doc["action"] = action_json(b);
    doc["trivialization"] = b.trivialization();
    doc["connections"] = {
        {{"name", "trivial"}, {"kind", "theta"}, {"entries", sparse_json(connection::trivial_connection(b))}}};
    doc["gauges"] = {{{"name", "rotate"}, {"tau_hat", {3}}}};
    out.emplace_back("fix_s3.json", dump(doc));
  }
  {
    const bundle::Bundle b = fixtures::prod();
    ordered_json doc = header(b);
    doc["product"] = {{"base_size", 2}};
    SpectralMap gamma(6, 1, 3);
    // A strong γ lifted from γ̂(x,y;·) = δ_{c1} − δ_e
    for (int p = 0; p < 3; ++p)
      for (int q = 3; q < 6; ++q) {
        gamma.at({p, q, 1}) = 1;
        gamma.at({p, q, 0}) = -1;
      }
    doc["connections"] = {classical_json("holonomy", {2, {0, 1, 1, 0}}),
                          {{"name", "lifted"}, {"kind", "gamma"}, {"entries", sparse_json(gamma)}}};
    doc["gauges"] = {{{"name", "shift"}, {"tau_hat", {1, 0}}}};
    out.emplace_back("fix_prod.json", dump(doc));
  }
  {
    const bundle::Bundle b = fixtures::nonfree();
    ordered_json doc = header(b);
    doc["action"] = action_json(b);
    out.emplace_back("fix_nonfree.json", dump(doc));
  }
  return out;
}

}  // namespace qpb::cli
