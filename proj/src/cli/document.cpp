#include <cstdint>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "qpb/cli.hpp"

namespace qpb::cli {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message + " at " + path);
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int as_index(const json& j, const std::string& path, int bound) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v >= bound) fail(path, "index out of range");
  return static_cast<int>(v);
}

int as_positive(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000)
    fail(path, "expected a positive integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Scalar as_scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(mpq_class(j.dump()));
  if (!j.is_string()) fail(path, "non-rational scalar literal");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error&) {
    fail(path, "non-rational scalar literal \"" + j.get<std::string>() + "\"");
  }
}

std::vector<std::vector<int>> index_table(const json& j, const std::string& path, int bound) {
  require_array(j, path);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = index_path(path, i);
    require_array(j[i], row_path);
    std::vector<int> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(as_index(j[i][k], index_path(row_path, k), bound));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<int> index_list(const json& j, const std::string& path, int bound, std::size_t size) {
  require_array(j, path);
  if (j.size() != size)
    fail(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_index(j[i], index_path(path, i), bound));
  return out;
}

// Sparse [i0, i1, ..., c, "scalar"] entries into a degree-1 density.
SpectralMap sparse_density(const json& j, const std::string& path, int npoints, int order,
                           std::size_t max_entries) {
  require_array(j, path);
  SpectralMap out(npoints, 1, order, max_entries);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string e = index_path(path, i);
    require_array(j[i], e);
    if (j[i].size() != 4) fail(e, "expected [point, point, group element, scalar]");
    const int p = as_index(j[i][0], index_path(e, 0), npoints);
    const int q = as_index(j[i][1], index_path(e, 1), npoints);
    const int c = as_index(j[i][2], index_path(e, 2), order);
    const std::size_t flat = out.density().flat_index({p, q, c});
    if (!seen.insert(flat).second) fail(e, "duplicate entry");
    out.at({p, q, c}) = as_scalar(j[i][3], index_path(e, 3));
  }
  return out;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

const ConnectionSpec* SpecDocument::find_connection(const std::string& name) const {
  for (const auto& c : connections)
    if (c.name == name) return &c;
  return nullptr;
}

const GaugeSpec* SpecDocument::find_gauge(const std::string& name) const {
  for (const auto& g : gauges)
    if (g.name == name) return &g;
  return nullptr;
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SpecDocument parse_spec(std::string_view text, std::size_t max_entries) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    const std::string where = "line " + std::to_string(line) + ", column " + std::to_string(column);
    throw ParseError(where, "malformed JSON at " + where);
  }
  require_object(root, "document");
  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> known{"format_version", "group",       "action", "product",
                                             "trivialization", "connections", "gauges"};
    if (!known.count(key)) fail(key, "unknown key");
  }

  const json& version = member(root, "format_version", "document");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    fail("format_version", "unsupported format version");

  SpecDocument doc;
  const json& group = require_object(member(root, "group", "document"), "group");
  const json& mul = member(group, "mul", "group");
  require_array(mul, "group.mul");
  const int order = static_cast<int>(mul.size());
  if (order == 0) fail("group.mul", "group table is empty");
  const auto table = index_table(mul, "group.mul", order);
  int identity = 0;
  if (auto it = group.find("identity"); it != group.end()) identity = as_index(*it, "group.identity", order);
  std::vector<std::string> labels;
  if (auto it = group.find("labels"); it != group.end()) {
    require_array(*it, "group.labels");
    std::set<std::string> unique;
    for (std::size_t i = 0; i < it->size(); ++i) {
      labels.push_back(as_string((*it)[i], index_path("group.labels", i)));
      if (!unique.insert(labels.back()).second) fail(index_path("group.labels", i), "duplicate label");
    }
  }
  try {
    doc.group = FiniteGroup::from_table(table, identity, labels);
  } catch (const StructuralError& e) {
    throw ParseError("group", e.what());
  }

  const bool has_action = root.contains("action");
  const bool has_product = root.contains("product");
  if (has_action == has_product) fail("document", "exactly one of \"action\" and \"product\" is required");
  if (has_action) {
    const json& act = require_array(root["action"], "action");
    const int n = static_cast<int>(act.size());
    if (n == 0) fail("action", "action table is empty");
    std::vector<std::vector<int>> rows;
    for (std::size_t p = 0; p < act.size(); ++p) {
      const std::string row_path = index_path("action", p);
      require_array(act[p], row_path);
      if (static_cast<int>(act[p].size()) != order)
        fail(row_path, "expected " + std::to_string(order) + " entries");
      std::vector<int> row;
      for (std::size_t a = 0; a < act[p].size(); ++a)
        row.push_back(as_index(act[p][a], index_path(row_path, a), n));
      rows.push_back(std::move(row));
    }
    doc.action = RightAction::from_table(rows, order);
  } else {
    const json& product = require_object(root["product"], "product");
    const int nb = as_positive(member(product, "base_size", "product"), "product.base_size");
    doc.product_base_size = nb;
  }

  // The orbit space is needed to size base-level tables.
  const auto probe_bundle = [&]() {
    if (doc.product_base_size) return bundle::make_product(*doc.product_base_size, doc.group);
    return bundle::Bundle(doc.group, doc.action, std::nullopt, max_entries);
  };
  const bundle::Bundle probe = probe_bundle();
  if (doc.product_base_size) doc.action = probe.action();
  const int n = probe.total_size();
  const int nb = probe.base_size();

  if (auto it = root.find("trivialization"); it != root.end())
    doc.trivialization = index_list(*it, "trivialization", order, static_cast<std::size_t>(n));
  else if (doc.product_base_size)
    doc.trivialization = probe.trivialization();

  if (auto it = root.find("connections"); it != root.end()) {
    require_array(*it, "connections");
    std::set<std::string> names;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = index_path("connections", i);
      const json& c = require_object((*it)[i], path);
      ConnectionSpec spec;
      spec.name = as_string(member(c, "name", path), child(path, "name"));
      if (spec.name.empty() || spec.name.find(':') != std::string::npos)
        fail(child(path, "name"), "connection names must be non-empty and contain no ':'");
      if (!names.insert(spec.name).second) fail(child(path, "name"), "duplicate connection name");
      const std::string kind = as_string(member(c, "kind", path), child(path, "kind"));
      if (kind == "theta" || kind == "gamma") {
        spec.kind = kind == "theta" ? ConnectionKind::theta : ConnectionKind::gamma;
        spec.density = sparse_density(member(c, "entries", path), child(path, "entries"), n, order, max_entries);
      } else if (kind == "gamma_hat") {
        spec.kind = ConnectionKind::gamma_hat;
        spec.density = sparse_density(member(c, "entries", path), child(path, "entries"), nb, order, max_entries);
      } else if (kind == "classical") {
        spec.kind = ConnectionKind::classical;
        const std::string gp = child(path, "g_hat");
        const auto rows = index_table(member(c, "g_hat", path), gp, order);
        connection::TransitionMap g_hat{nb, {}};
        if (static_cast<int>(rows.size()) != nb) fail(gp, "expected " + std::to_string(nb) + " rows");
        for (std::size_t x = 0; x < rows.size(); ++x) {
          if (static_cast<int>(rows[x].size()) != nb)
            fail(index_path(gp, x), "expected " + std::to_string(nb) + " entries");
          g_hat.table.insert(g_hat.table.end(), rows[x].begin(), rows[x].end());
        }
        spec.g_hat = std::move(g_hat);
      } else {
        fail(child(path, "kind"), "unknown connection kind \"" + kind + "\"");
      }
      doc.connections.push_back(std::move(spec));
    }
  }

  if (auto it = root.find("gauges"); it != root.end()) {
    require_array(*it, "gauges");
    std::set<std::string> names;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = index_path("gauges", i);
      const json& g = require_object((*it)[i], path);
      GaugeSpec spec;
      spec.name = as_string(member(g, "name", path), child(path, "name"));
      if (spec.name.empty() || spec.name.find(':') != std::string::npos)
        fail(child(path, "name"), "gauge names must be non-empty and contain no ':'");
      if (!names.insert(spec.name).second) fail(child(path, "name"), "duplicate gauge name");
      spec.tau.tau_hat = index_list(member(g, "tau_hat", path), child(path, "tau_hat"), order,
                                    static_cast<std::size_t>(nb));
      doc.gauges.push_back(std::move(spec));
    }
  }

  return doc;
}

}  // namespace qpb::cli
