#pragma once

#include <string>
#include <vector>

#include "statone/operator_spec.hpp"
#include "statone/table_algebra.hpp"

namespace statone {

// Extensional form of a unary operator: values[i] is the image of element i.
struct UnaryTable {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int apply(int x) const { return values[static_cast<std::size_t>(x)]; }
  bool operator==(const UnaryTable&) const = default;
};

UnaryTable identity_table(int m);

// Materialize a structural operator as a table over the ranked carrier.
UnaryTable table_of_spec(const OperatorSpec& spec, const ProductAlgebra& alg,
                         std::uint64_t cap = 256);

// Report for the four defining laws of an internal state plus the facts that
// follow from them (checked independently, reported separately).
struct StateOperatorReport {
  std::vector<LawCheck> axioms;  // defining laws; pass() quantifies over these
  std::vector<LawCheck> derived; // consequences, for diagnostics only
  bool pass = true;

  const LawCheck* find(const std::string& law) const;
};

StateOperatorReport check_state_operator_axioms(const TableAlgebra& alg, const UnaryTable& t);

// Early-exit predicates for enumeration sweeps. `values` must have alg.size()
// entries inside the carrier; no report is built.
bool is_state_operator(const TableAlgebra& alg, const std::vector<int>& values);
// MV-endomorphism (preserves oplus, star, zero) and idempotent.
bool is_state_morphism(const TableAlgebra& alg, const std::vector<int>& values);

// Kernel {x : t(x) = zero} and image t(carrier), both as ascending index lists.
struct TableKernelImage {
  std::vector<int> kernel;
  std::vector<int> image;
};
TableKernelImage kernel_and_image(const TableAlgebra& alg, const UnaryTable& t);

} // namespace statone
