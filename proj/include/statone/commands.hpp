#pragma once

#include <cstdint>
#include <string>

namespace statone {

// Stable exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;       // all checks passed
inline constexpr int kExitViolation = 1;  // mathematical violation found
inline constexpr int kExitParse = 2;      // parse/schema error, wrong kind
inline constexpr int kExitCap = 3;        // resource cap exceeded

// What a subcommand produced.  `report` is human-readable status text for
// stdout; `document` is an emitted document or DOT graph (empty when the
// command has none), written to --out or stdout by the driver.
struct CommandOutcome {
  int exit_code = kExitPass;
  std::string report;
  std::string document;
};

// Element cap for exhaustive unary-table sweeps (the carrier size m; the
// sweep visits m^m candidate tables).  Defaults to 8; the environment
// variable STATONE_TABLE_CAP overrides it.  Throws std::invalid_argument
// when the variable is set but not a positive integer.
std::uint64_t table_enumeration_cap();

// Validity suite for the document at `path`: structural checks happen at
// parse time (exit 2); this runs the mathematical ones -- MV axioms for
// tables, operator divisibility/idempotence, self-map idempotence -- and
// reports the first counterexample per failed law (exit 1).  Certificate
// documents are replayed from their stored data.
CommandOutcome cmd_check(const std::string& path);

// Apply the dualizing functor: product -> stone and cube -> bauer
// ("algebra-to-space"), stone -> product and bauer -> cube
// ("space-to-algebra").  An empty direction infers from the kind; a
// direction that contradicts the kind is a schema error (exit 2).
CommandOutcome cmd_dualize(const std::string& path, const std::string& direction);

// Run the full round trip on the object and emit a certificate document
// recording the dual object, the recomputed double dual, the witness map,
// and every identity swept.  Exit 0 iff all identities pass.  On a
// certificate document this replays the stored certificate instead.
CommandOutcome cmd_roundtrip(const std::string& path);

// List internal-state operators for the object's carrier.  Mode
// "structural": all coordinate maps satisfying divisibility + idempotence
// (product and cube documents).  Mode "table": exhaustive unary-table sweep
// (product and table documents), flagging for each operator whether it is a
// morphism-style operator and whether a structural counterpart exists.
CommandOutcome cmd_enumerate(const std::string& path, const std::string& mode);

// Emit the self-map of a stone or bauer document as a DOT digraph: one node
// per point/vertex, one edge x -> g(x), fixed points drawn as self-loops.
CommandOutcome cmd_export_dot(const std::string& path);

}  // namespace statone
