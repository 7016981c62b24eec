// Command-line front end: parse a JSON document, run the requested
// subcommand, and write the report / output document with stable exit codes
// (0 pass, 1 mathematical violation, 2 parse/schema error, 3 resource cap).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "statone/commands.hpp"

namespace {

// Reports go to stdout unless the emitted document is also bound for stdout,
// in which case the report moves to stderr so stdout stays parseable.
int emit(const statone::CommandOutcome& outcome, const std::string& out_path) {
  if (!outcome.document.empty()) {
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return statone::kExitParse;
      }
      out << outcome.document;
      std::cout << outcome.report;
    } else {
      std::cout << outcome.document;
      std::cerr << outcome.report;
    }
  } else {
    std::cout << outcome.report;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statone: finite state-algebra duality toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string direction;
  std::string mode = "structural";
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document (JSON)")->required();
    cmd->add_option("--out", out_path, "write the emitted document here");
  };

  CLI::App* check =
      app.add_subcommand("check", "run the validity suite on a document");
  add_common(check);

  CLI::App* dualize =
      app.add_subcommand("dualize", "apply the duality functor");
  add_common(dualize);
  dualize->add_option("--direction", direction,
                      "algebra-to-space | space-to-algebra (default: inferred)");

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "verify the duality round trip and emit a certificate");
  add_common(roundtrip);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list internal-state operators");
  add_common(enumerate);
  enumerate->add_option("--mode", mode, "structural | table");

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "emit the self-map as a DOT digraph");
  add_common(export_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems are schema errors under the stable scheme; --help and
    // --version exit 0 as usual.
    const int code = app.exit(e);
    return code == 0 ? 0 : statone::kExitParse;
  }

  statone::CommandOutcome outcome;
  if (check->parsed()) {
    outcome = statone::cmd_check(file);
  } else if (dualize->parsed()) {
    outcome = statone::cmd_dualize(file, direction);
  } else if (roundtrip->parsed()) {
    outcome = statone::cmd_roundtrip(file);
  } else if (enumerate->parsed()) {
    outcome = statone::cmd_enumerate(file, mode);
  } else {
    outcome = statone::cmd_export_dot(file);
  }
  return emit(outcome, out_path);
}
