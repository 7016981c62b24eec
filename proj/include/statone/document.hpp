#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "statone/bauer.hpp"
#include "statone/certificate.hpp"
#include "statone/chain.hpp"
#include "statone/operator_spec.hpp"
#include "statone/stone.hpp"
#include "statone/table_algebra.hpp"

namespace statone {

// JSON document layer.  Parsing validates shape only: required keys, value
// types, and index ranges (every cross-reference lands inside the object it
// points into).  Mathematical properties -- idempotence, divisibility, the
// algebra axioms -- are deliberately not enforced here; the check and
// roundtrip commands test those and report violations with diagnostics.
// This split is what lets `statone check` load a structurally well-formed
// but mathematically broken document and exit 1 instead of 2.

// {"kind":"product","chains":[...],"sigma":[...]?}
struct ProductDocument {
  std::vector<int> chains;                // positive chain orders
  std::optional<std::vector<int>> sigma;  // unvalidated beyond index range
};

// {"kind":"table","oplus":[[...]],"star":[...],"zero":n,"tau":[...]?}
struct TableDocument {
  TableAlgebra algebra;
  std::optional<std::vector<int>> tau;
};

// {"kind":"stone","points":[...],"g":[...]}
struct StoneDocument {
  std::vector<std::string> points;
  std::vector<int> g;  // total and in-range; idempotence is a check concern
};

// {"kind":"bauer","vertices":n,"g":[...]}
struct BauerDocument {
  int vertices = 0;
  std::vector<int> g;
};

// {"kind":"cube","dim":n,"sigma":[...]}
struct CubeDocument {
  int dim = 0;
  std::vector<int> sigma;
};

using Document = std::variant<ProductDocument, TableDocument, StoneDocument,
                              BauerDocument, CubeDocument, StoneCertificate,
                              BauerCertificate>;

// Raised for malformed JSON, missing or mistyped fields, and out-of-range
// cross-references.  The CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Short lowercase tag for messages: "product", "table", ..., "stone-certificate".
std::string document_kind(const Document& doc);

Document parse_document(const std::string& text);
Document load_document(const std::string& path);  // ParseError on IO failure too

// Canonical serialization: two-space indent, keys in schema order, trailing
// newline.  parse_document(print_document(d)) reproduces d exactly.
std::string print_document(const Document& doc);

}  // namespace statone
