#include "statone/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "statone/bauer.hpp"
#include "statone/chain.hpp"
#include "statone/document.hpp"
#include "statone/enumerate.hpp"
#include "statone/operator_spec.hpp"
#include "statone/state_checks.hpp"
#include "statone/stone.hpp"
#include "statone/table_algebra.hpp"

namespace statone {

namespace {

std::string format_map(const std::vector<int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << v[i];
  }
  out << "]";
  return out.str();
}

// First idempotence counterexample of a self-map, phrased with the document's
// field name ("g" or "sigma"); empty when the map is idempotent.
std::string idempotence_violation(const std::vector<int>& map,
                                  const std::string& name) {
  for (std::size_t j = 0; j < map.size(); ++j) {
    const int once = map[j];
    const int twice = map[static_cast<std::size_t>(once)];
    if (twice != once) {
      std::ostringstream out;
      out << "idempotence fails: " << name << "(" << name << "(" << j
          << ")) = " << twice << " but " << name << "(" << j << ") = " << once;
      return out.str();
    }
  }
  return "";
}

struct ReportBuilder {
  std::ostringstream text;

  void line(const std::string& s) { text << s << "\n"; }
  std::string str() const { return text.str(); }
};

// Shared exception-to-exit-code policy.  Parse/schema problems exit 2,
// resource caps exit 3, and mathematical failures surfaced as exceptions
// (functor guarantees that did not hold) exit 1.
CommandOutcome run_guarded(const std::function<CommandOutcome()>& body) {
  try {
    return body();
  } catch (const ParseError& error) {
    return {kExitParse, std::string("error: ") + error.what() + "\n", ""};
  } catch (const CapExceeded& error) {
    return {kExitCap, std::string("error: ") + error.what() + "\n", ""};
  } catch (const std::length_error& error) {
    return {kExitCap, std::string("error: ") + error.what() + "\n", ""};
  } catch (const std::exception& error) {
    return {kExitViolation, std::string("violation: ") + error.what() + "\n",
            ""};
  }
}

// --- check --------------------------------------------------------------

// Carrier cap for the O(m^3) axiom sweeps run by `check`.  Independent of
// the enumeration cap: this bounds a single table's sweep, not an m^m scan.
constexpr std::uint64_t kCheckSweepCap = 256;

void report_law_checks(ReportBuilder& report, const std::vector<LawCheck>& laws,
                       bool& ok) {
  for (const LawCheck& law : laws) {
    if (law.pass) {
      continue;
    }
    ok = false;
    report.line("violation: " + law.law + ": first counterexample " +
                law.counterexample);
  }
}

CommandOutcome check_product(const ProductDocument& doc) {
  ReportBuilder report;
  ChainSignature sig{doc.chains};
  ProductAlgebra alg{sig};
  report.line("product: chains " + format_map(doc.chains));
  bool ok = true;
  if (doc.sigma) {
    const OperatorSpec spec{*doc.sigma};
    const std::string violation = describe_spec_violation(spec, sig);
    if (!violation.empty()) {
      report.line("violation: " + violation);
      ok = false;
    } else {
      report.line("operator spec " + format_map(*doc.sigma) +
                  ": divisibility and idempotence hold");
    }
  }
  // Re-verify extensionally when the carrier is small enough to sweep; the
  // structural checks above are already decisive, so skipping the sweep on
  // big carriers loses redundancy, not coverage.
  if (ok && alg.size() <= kCheckSweepCap) {
    const TableAlgebra table = to_table(alg, kCheckSweepCap);
    const MvAxiomReport axioms = check_mv_axioms(table);
    report_law_checks(report, axioms.laws, ok);
    if (ok) {
      report.line("axiom sweep over " + std::to_string(table.size()) +
                  " elements: all laws hold");
    }
    if (ok && doc.sigma) {
      const UnaryTable t =
          table_of_spec(OperatorSpec{*doc.sigma}, alg, kCheckSweepCap);
      const StateOperatorReport ops = check_state_operator_axioms(table, t);
      report_law_checks(report, ops.axioms, ok);
      report_law_checks(report, ops.derived, ok);
      if (ok) {
        report.line("state-operator sweep: all laws hold");
      }
    }
  }
  report.line(ok ? "check passed" : "check failed");
  return {ok ? kExitPass : kExitViolation, report.str(), ""};
}

CommandOutcome check_table(const TableDocument& doc) {
  ReportBuilder report;
  const std::uint64_t m = static_cast<std::uint64_t>(doc.algebra.size());
  if (m > kCheckSweepCap) {
    throw CapExceeded("table carrier has " + std::to_string(m) +
                      " elements; the axiom sweep is capped at " +
                      std::to_string(kCheckSweepCap));
  }
  report.line("table: " + std::to_string(m) + " elements");
  bool ok = true;
  const MvAxiomReport axioms = check_mv_axioms(doc.algebra);
  report_law_checks(report, axioms.laws, ok);
  if (ok) {
    report.line("axiom sweep: all laws hold");
  }
  if (doc.tau) {
    const UnaryTable t{*doc.tau};
    const StateOperatorReport ops = check_state_operator_axioms(doc.algebra, t);
    bool op_ok = true;
    report_law_checks(report, ops.axioms, op_ok);
    report_law_checks(report, ops.derived, op_ok);
    if (op_ok) {
      report.line("state-operator sweep: all laws hold");
      report.line(is_state_morphism(doc.algebra, t.values)
                      ? "operator is an idempotent endomorphism"
                      : "operator is not an endomorphism");
    }
    ok = ok && op_ok;
  }
  report.line(ok ? "check passed" : "check failed");
  return {ok ? kExitPass : kExitViolation, report.str(), ""};
}

CommandOutcome check_self_map(const std::string& kind, std::size_t count,
                              const std::vector<int>& map,
                              const std::string& name) {
  ReportBuilder report;
  report.line(kind + ": " + std::to_string(count) + " points, self-map " +
              format_map(map));
  const std::string violation = idempotence_violation(map, name);
  if (!violation.empty()) {
    report.line("violation: " + violation);
    report.line("check failed");
    return {kExitViolation, report.str(), ""};
  }
  report.line("self-map is idempotent");
  report.line("check passed");
  return {kExitPass, report.str(), ""};
}

CommandOutcome check_replay(const std::vector<std::string>& failures,
                            bool stored_pass, std::size_t check_count) {
  ReportBuilder report;
  bool ok = failures.empty();
  for (const std::string& failure : failures) {
    report.line("replay mismatch: " + failure);
  }
  if (ok && !stored_pass) {
    // The stored identities replayed cleanly, yet the certificate claims a
    // failure: the verdict flag itself has been tampered with.
    report.line("replay mismatch: stored verdict is fail but every stored "
                "identity replays cleanly");
    ok = false;
  }
  if (ok) {
    report.line("replay confirmed " + std::to_string(check_count) +
                " stored checks");
  }
  report.line(ok ? "check passed" : "check failed");
  return {ok ? kExitPass : kExitViolation, report.str(), ""};
}

// --- dualize ------------------------------------------------------------

const char* expected_direction(const Document& doc) {
  if (std::holds_alternative<ProductDocument>(doc) ||
      std::holds_alternative<CubeDocument>(doc)) {
    return "algebra-to-space";
  }
  if (std::holds_alternative<StoneDocument>(doc) ||
      std::holds_alternative<BauerDocument>(doc)) {
    return "space-to-algebra";
  }
  return nullptr;
}

// Product documents enter the Boolean duality only; anything else lives on
// the simplex side as a cube document.  Returns the validated signature.
ChainSignature require_boolean_product(const ProductDocument& doc) {
  ChainSignature sig{doc.chains};
  if (!sig.is_boolean()) {
    throw ParseError(
        "only Boolean products (all chain orders 1) have a dual state space; "
        "divisible algebras are cube documents");
  }
  if (!doc.sigma) {
    throw ParseError("product document needs a sigma entry to dualize");
  }
  return sig;
}

CommandOutcome dualize_document(const Document& doc) {
  ReportBuilder report;
  if (const auto* product = std::get_if<ProductDocument>(&doc)) {
    ChainSignature sig = require_boolean_product(*product);
    const OperatorSpec spec{*product->sigma};
    const std::string violation = describe_spec_violation(spec, sig);
    if (!violation.empty()) {
      report.line("violation: " + violation);
      return {kExitViolation, report.str(), ""};
    }
    ProductAlgebra alg{sig};
    const StoneStatePair pair = to_state_space(alg, spec);
    report.line("dual state space: " + std::to_string(pair.size()) +
                " points, g " + format_map(pair.g));
    return {kExitPass, report.str(),
            print_document(StoneDocument{pair.points, pair.g})};
  }
  if (const auto* stone = std::get_if<StoneDocument>(&doc)) {
    const std::string violation = idempotence_violation(stone->g, "g");
    if (!violation.empty()) {
      report.line("violation: " + violation);
      return {kExitViolation, report.str(), ""};
    }
    StoneStatePair pair{stone->points, stone->g};
    pair.validate();
    const InducedStateAlgebra dual = to_state_algebra(pair);
    report.line("dual algebra: Boolean product with " +
                std::to_string(dual.signature.coords()) + " atoms, sigma " +
                format_map(dual.tau.sigma));
    return {kExitPass, report.str(),
            print_document(
                ProductDocument{dual.signature.orders(), dual.tau.sigma})};
  }
  if (const auto* cube = std::get_if<CubeDocument>(&doc)) {
    const std::string violation = idempotence_violation(cube->sigma, "sigma");
    if (!violation.empty()) {
      report.line("violation: " + violation);
      return {kExitViolation, report.str(), ""};
    }
    const RationalCubeAlgebra algebra{cube->dim};
    const BauerObject dual = to_state_simplex(algebra, OperatorSpec{cube->sigma});
    report.line("dual simplex: " + std::to_string(dual.vertices) +
                " vertices, g " + format_map(dual.g));
    return {kExitPass, report.str(),
            print_document(BauerDocument{dual.vertices, dual.g})};
  }
  const auto& bauer = std::get<BauerDocument>(doc);
  const std::string violation = idempotence_violation(bauer.g, "g");
  if (!violation.empty()) {
    report.line("violation: " + violation);
    return {kExitViolation, report.str(), ""};
  }
  BauerObject obj{bauer.vertices, bauer.g, {}};
  obj.validate();
  const InducedFunctionAlgebra dual = to_function_algebra(obj);
  report.line("dual algebra: rational cube of dimension " +
              std::to_string(dual.algebra.dimension) + ", sigma " +
              format_map(dual.tau.sigma));
  return {kExitPass, report.str(),
          print_document(CubeDocument{dual.algebra.dimension, dual.tau.sigma})};
}

// --- roundtrip ----------------------------------------------------------

void report_certificate(ReportBuilder& report,
                        const std::vector<IdentityCheck>& checks, bool pass) {
  for (const IdentityCheck& check : checks) {
    if (!check.pass) {
      report.line("violation: " + check.name +
                  (check.detail.empty() ? "" : ": " + check.detail));
    }
  }
  if (pass) {
    report.line("round trip verified: " + std::to_string(checks.size()) +
                " identities hold");
  } else {
    report.line("round trip failed");
  }
}

// --- enumerate ----------------------------------------------------------

CommandOutcome enumerate_structural(const ChainSignature& sig) {
  ReportBuilder report;
  const std::vector<OperatorSpec> specs = enumerate_state_morphism_operators(sig);
  for (const OperatorSpec& spec : specs) {
    report.line("operator " + format_map(spec.sigma));
  }
  report.line("count: " + std::to_string(specs.size()));
  return {kExitPass, report.str(), ""};
}

CommandOutcome enumerate_tables(const TableAlgebra& table,
                                const std::optional<ChainSignature>& sig,
                                std::uint64_t cap) {
  ReportBuilder report;
  const std::vector<UnaryTable> found = enumerate_state_operator_tables(table, cap);
  // Structural counterparts exist only when the carrier came from a product
  // document; raw tables are flagged for the morphism property alone.
  std::set<std::vector<int>> structural;
  if (sig) {
    ProductAlgebra alg{*sig};
    for (const OperatorSpec& spec : enumerate_state_morphism_operators(*sig)) {
      structural.insert(table_of_spec(spec, alg, table.size()).values);
    }
  }
  std::size_t missing_structural = 0;
  for (const UnaryTable& t : found) {
    std::string flags = is_state_morphism(table, t.values)
                            ? "morphism"
                            : "not a morphism";
    if (sig) {
      if (structural.count(t.values) > 0) {
        flags += ", structural";
      } else {
        flags += ", no structural counterpart";
        ++missing_structural;
      }
    }
    report.line("operator " + format_map(t.values) + ": " + flags);
  }
  if (sig && missing_structural > 0) {
    report.line("warning: " + std::to_string(missing_structural) +
                " operator(s) without structural counterpart");
  }
  report.line("count: " + std::to_string(found.size()));
  return {kExitPass, report.str(), ""};
}

}  // namespace

std::uint64_t table_enumeration_cap() {
  const char* raw = std::getenv("STATONE_TABLE_CAP");
  if (raw == nullptr || *raw == '\0') {
    return 8;
  }
  std::uint64_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ParseError("STATONE_TABLE_CAP must be a positive integer, got \"" +
                     std::string(raw) + "\"");
  }
  return value;
}

CommandOutcome cmd_check(const std::string& path) {
  return run_guarded([&]() -> CommandOutcome {
    const Document doc = load_document(path);
    if (const auto* product = std::get_if<ProductDocument>(&doc)) {
      return check_product(*product);
    }
    if (const auto* table = std::get_if<TableDocument>(&doc)) {
      return check_table(*table);
    }
    if (const auto* stone = std::get_if<StoneDocument>(&doc)) {
      return check_self_map("stone", stone->points.size(), stone->g, "g");
    }
    if (const auto* bauer = std::get_if<BauerDocument>(&doc)) {
      return check_self_map("bauer", static_cast<std::size_t>(bauer->vertices),
                            bauer->g, "g");
    }
    if (const auto* cube = std::get_if<CubeDocument>(&doc)) {
      return check_self_map("cube", static_cast<std::size_t>(cube->dim),
                            cube->sigma, "sigma");
    }
    if (const auto* cert = std::get_if<StoneCertificate>(&doc)) {
      return check_replay(replay_stone_certificate(*cert), cert->pass,
                          cert->checks.size());
    }
    const auto& cert = std::get<BauerCertificate>(doc);
    return check_replay(replay_bauer_certificate(cert), cert.pass,
                        cert.checks.size());
  });
}

CommandOutcome cmd_dualize(const std::string& path,
                           const std::string& direction) {
  return run_guarded([&]() -> CommandOutcome {
    if (!direction.empty() && direction != "algebra-to-space" &&
        direction != "space-to-algebra") {
      throw ParseError("unknown direction \"" + direction +
                       "\"; use algebra-to-space or space-to-algebra");
    }
    const Document doc = load_document(path);
    const char* expected = expected_direction(doc);
    if (expected == nullptr) {
      throw ParseError("cannot dualize a " + document_kind(doc) +
                       " document; use product, stone, bauer, or cube");
    }
    if (!direction.empty() && direction != expected) {
      throw ParseError("kind/direction mismatch: a " + document_kind(doc) +
                       " document dualizes " + expected);
    }
    return dualize_document(doc);
  });
}

CommandOutcome cmd_roundtrip(const std::string& path) {
  return run_guarded([&]() -> CommandOutcome {
    const Document doc = load_document(path);
    ReportBuilder report;
    if (const auto* product = std::get_if<ProductDocument>(&doc)) {
      ChainSignature sig = require_boolean_product(*product);
      const OperatorSpec spec{*product->sigma};
      const std::string violation = describe_spec_violation(spec, sig);
      if (!violation.empty()) {
        report.line("violation: " + violation);
        return {kExitViolation, report.str(), ""};
      }
      ProductAlgebra alg{sig};
      const StoneCertificate cert = verify_stone_duality(alg, spec);
      report_certificate(report, cert.checks, cert.pass);
      return {cert.pass ? kExitPass : kExitViolation, report.str(),
              print_document(cert)};
    }
    if (const auto* stone = std::get_if<StoneDocument>(&doc)) {
      const std::string violation = idempotence_violation(stone->g, "g");
      if (!violation.empty()) {
        report.line("violation: " + violation);
        return {kExitViolation, report.str(), ""};
      }
      StoneStatePair pair{stone->points, stone->g};
      pair.validate();
      const StoneCertificate cert = verify_stone_duality(pair);
      report_certificate(report, cert.checks, cert.pass);
      return {cert.pass ? kExitPass : kExitViolation, report.str(),
              print_document(cert)};
    }
    if (const auto* cube = std::get_if<CubeDocument>(&doc)) {
      const std::string violation = idempotence_violation(cube->sigma, "sigma");
      if (!violation.empty()) {
        report.line("violation: " + violation);
        return {kExitViolation, report.str(), ""};
      }
      const RationalCubeAlgebra algebra{cube->dim};
      const BauerCertificate cert =
          verify_bauer_duality(algebra, OperatorSpec{cube->sigma});
      report_certificate(report, cert.checks, cert.pass);
      return {cert.pass ? kExitPass : kExitViolation, report.str(),
              print_document(cert)};
    }
    if (const auto* bauer = std::get_if<BauerDocument>(&doc)) {
      const std::string violation = idempotence_violation(bauer->g, "g");
      if (!violation.empty()) {
        report.line("violation: " + violation);
        return {kExitViolation, report.str(), ""};
      }
      BauerObject obj{bauer->vertices, bauer->g, {}};
      obj.validate();
      const BauerCertificate cert = verify_bauer_duality(obj);
      report_certificate(report, cert.checks, cert.pass);
      return {cert.pass ? kExitPass : kExitViolation, report.str(),
              print_document(cert)};
    }
    if (const auto* cert = std::get_if<StoneCertificate>(&doc)) {
      return check_replay(replay_stone_certificate(*cert), cert->pass,
                          cert->checks.size());
    }
    if (const auto* cert = std::get_if<BauerCertificate>(&doc)) {
      return check_replay(replay_bauer_certificate(*cert), cert->pass,
                          cert->checks.size());
    }
    throw ParseError(
        "round trip needs a product, stone, bauer, cube, or certificate "
        "document; table algebras have no canonical coordinates");
  });
}

CommandOutcome cmd_enumerate(const std::string& path, const std::string& mode) {
  return run_guarded([&]() -> CommandOutcome {
    if (mode != "structural" && mode != "table") {
      throw ParseError("unknown mode \"" + mode +
                       "\"; use structural or table");
    }
    const Document doc = load_document(path);
    if (mode == "structural") {
      if (const auto* product = std::get_if<ProductDocument>(&doc)) {
        return enumerate_structural(ChainSignature{product->chains});
      }
      if (const auto* cube = std::get_if<CubeDocument>(&doc)) {
        // A cube is coordinatewise divisible, so only idempotence filters.
        return enumerate_structural(
            ChainSignature{std::vector<int>(static_cast<std::size_t>(cube->dim), 1)});
      }
      throw ParseError("structural enumeration needs a product or cube "
                       "document");
    }
    const std::uint64_t cap = table_enumeration_cap();
    if (const auto* product = std::get_if<ProductDocument>(&doc)) {
      ChainSignature sig{product->chains};
      ProductAlgebra alg{sig};
      const TableAlgebra table = to_table(alg, cap);
      return enumerate_tables(table, sig, cap);
    }
    if (const auto* table = std::get_if<TableDocument>(&doc)) {
      return enumerate_tables(table->algebra, std::nullopt, cap);
    }
    throw ParseError("table enumeration needs a product or table document");
  });
}

CommandOutcome cmd_export_dot(const std::string& path) {
  return run_guarded([&]() -> CommandOutcome {
    const Document doc = load_document(path);
    std::vector<std::string> labels;
    const std::vector<int>* map = nullptr;
    if (const auto* stone = std::get_if<StoneDocument>(&doc)) {
      labels = stone->points;
      map = &stone->g;
    } else if (const auto* bauer = std::get_if<BauerDocument>(&doc)) {
      for (int j = 0; j < bauer->vertices; ++j) {
        labels.push_back(std::to_string(j));
      }
      map = &bauer->g;
    } else {
      throw ParseError("DOT export needs a stone or bauer document");
    }
    auto quote = [](const std::string& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      out += "\"";
      return out;
    };
    std::ostringstream dot;
    dot << "digraph self_map {\n";
    for (const std::string& label : labels) {
      dot << "  " << quote(label) << ";\n";
    }
    for (std::size_t j = 0; j < map->size(); ++j) {
      dot << "  " << quote(labels[j]) << " -> "
          << quote(labels[static_cast<std::size_t>((*map)[j])]) << ";\n";
    }
    dot << "}\n";
    ReportBuilder report;
    report.line(std::to_string(labels.size()) + " nodes, " +
                std::to_string(map->size()) + " edges");
    return {kExitPass, report.str(), dot.str()};
  });
}

}  // namespace statone
