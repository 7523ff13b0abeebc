#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/connection.hpp"
#include "qpb/error.hpp"
#include "qpb/gauge.hpp"
#include "qpb/report.hpp"

namespace qpb::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// A document that failed to parse. `location()` is "line L, column C" for
/// syntax errors and a JSON path such as "action[3][1]" otherwise; the
/// message already names it.
class ParseError : public StructuralError {
 public:
  ParseError(std::string location, const std::string& message)
      : StructuralError(message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

enum class ConnectionKind { theta, gamma, gamma_hat, classical };

struct ConnectionSpec {
  std::string name;
  ConnectionKind kind = ConnectionKind::theta;
  /// θ or γ over P×P×G, or γ̂ over B×B×G, depending on kind.
  std::optional<SpectralMap> density;
  std::optional<connection::TransitionMap> g_hat;
};

struct GaugeSpec {
  std::string name;
  gauge::GaugeMap tau;
};

/// A validated document. Structural ranges are checked on parse; the
/// algebraic axioms are left to the suites.
struct SpecDocument {
  FiniteGroup group;
  RightAction action;
  std::optional<int> product_base_size;
  std::optional<std::vector<int>> trivialization;
  std::vector<ConnectionSpec> connections;
  std::vector<GaugeSpec> gauges;

  const ConnectionSpec* find_connection(const std::string& name) const;
  const GaugeSpec* find_gauge(const std::string& name) const;
};

/// Parses the JSON document. Throws ParseError at the first problem.
SpecDocument parse_spec(std::string_view text, std::size_t max_entries = kDefaultMaxEntries);

/// FNV-1a 64-bit digest of the input bytes, as 16 hex digits.
std::string input_digest(std::string_view text);

struct RunReport {
  std::string tool_version = kToolVersion;
  std::string input_digest;
  std::vector<std::string> suites;
  Report report;
  int exit_status() const { return report.passed() ? 0 : 1; }
};

/// Every suite the document supports, in execution order.
std::vector<std::string> default_suites(const SpecDocument& doc);

/// Runs the requested suites in the fixed order group, action, comodule,
/// freeness, exactness, trivialization, connection:*, curvature:*, gauge:*
/// whatever order they were requested in. Throws ConfigurationError for an
/// unknown suite or a reference to an undefined connection or gauge. Errors
/// raised inside a suite become a failed "<suite>.precondition" check.
RunReport run_checks(const SpecDocument& doc, const std::vector<std::string>& suites,
                     std::string digest = {}, std::size_t max_entries = kDefaultMaxEntries);

/// Text ends with "ALL CHECKS PASSED (k checks)" or names the first failure.
std::string emit_text(const RunReport& r);
/// Stable, byte-deterministic JSON.
std::string emit_json(const RunReport& r);

/// θ for a named connection, canonicalized from whatever kind was given.
connection::ConnectionForm resolve_connection(const bundle::Bundle& b, const ConnectionSpec& c);
/// The bundle a document describes, with its trivialization (given, or
/// synthesized when the action is free).
bundle::Bundle build_bundle(const SpecDocument& doc, std::size_t max_entries = kDefaultMaxEntries);

/// Sparse curvature listing for `qpb curvature`.
std::string emit_curvature(const SpecDocument& doc, const std::string& connection, bool json,
                           std::string digest = {}, std::size_t max_entries = kDefaultMaxEntries);

/// The four shipped fixture documents as (file name, JSON text).
std::vector<std::pair<std::string, std::string>> fixture_documents();

}  // namespace qpb::cli
