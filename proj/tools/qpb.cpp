// qpb: verify finite principal bundle documents.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpb/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qpb::ConfigurationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite quantum principal bundles"};
  app.set_version_flag("--version", qpb::cli::kToolVersion);
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> suites;
  std::string format = "text";
  std::size_t max_entries = qpb::kDefaultMaxEntries;

  auto* check = app.add_subcommand("check", "Run verification suites on a document");
  check->add_option("file", file, "Bundle document (JSON)")->required();
  check->add_option("--suite", suites, "Suite to run; repeatable (default: all)");
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--max-entries", max_entries, "Largest dense table allowed");

  std::string out_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "Write the reference fixture documents");
  fixtures->add_option("dir", out_dir, "Output directory");

  std::string connection;
  auto* curvature = app.add_subcommand("curvature", "Print the curvature of a connection");
  curvature->add_option("file", file, "Bundle document (JSON)")->required();
  curvature->add_option("--connection", connection, "Connection name")->required();
  curvature->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  curvature->add_option("--max-entries", max_entries, "Largest dense table allowed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fixtures) {
      std::filesystem::create_directories(out_dir);
      for (const auto& [name, text] : qpb::cli::fixture_documents()) {
        const auto path = std::filesystem::path(out_dir) / name;
        std::ofstream(path, std::ios::binary) << text;
        std::cout << path.string() << "\n";
      }
      return 0;
    }
    const std::string text = read_file(file);
    const std::string digest = qpb::cli::input_digest(text);
    const qpb::cli::SpecDocument doc = qpb::cli::parse_spec(text, max_entries);
    if (*curvature) {
      std::cout << qpb::cli::emit_curvature(doc, connection, format == "json", digest, max_entries);
      return 0;
    }
    if (suites.empty()) suites = qpb::cli::default_suites(doc);
    const auto report = qpb::cli::run_checks(doc, suites, digest, max_entries);
    std::cout << (format == "json" ? qpb::cli::emit_json(report) : qpb::cli::emit_text(report));
    return report.exit_status();
  } catch (const qpb::cli::ParseError& e) {
    std::cerr << "qpb: " << file << ": " << e.what() << "\n";
  } catch (const qpb::Error& e) {
    std::cerr << "qpb: " << e.what() << "\n";
  }
  return 2;
}
