#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "statone/operator_spec.hpp"
#include "statone/state_checks.hpp"
#include "statone/table_algebra.hpp"

namespace statone {

// Thrown when an exhaustive sweep would exceed its element cap. Derives from
// std::length_error so cap overruns and oversized tables surface uniformly.
struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

// All self-maps f of {0..k-1} with f(f(j)) = f(j), in lexicographic order of
// the value vector (f[0] most significant).
std::vector<std::vector<int>> idempotent_self_maps(int k);

// All valid operator specs for the signature (divisibility + idempotence),
// lexicographic in sigma.
std::vector<OperatorSpec> enumerate_state_morphism_operators(const ChainSignature& sig);

// Exhaustive m^m sweeps over unary tables, filtered by the respective
// predicate. Throws CapExceeded when the carrier has more than max_elements
// entries (default keeps the sweep at or under 8^8 candidates). Results are
// in lexicographic order of the value vector.
std::vector<UnaryTable> enumerate_state_operator_tables(const TableAlgebra& alg,
                                                        std::uint64_t max_elements = 8);
std::vector<UnaryTable> enumerate_state_morphism_tables(const TableAlgebra& alg,
                                                        std::uint64_t max_elements = 8);

// All coordinatewise homomorphisms source -> target that intertwine the two
// operators (hom . source_op == target_op . hom), lexicographic in mu.
std::vector<AlgebraHom> enumerate_operator_homs(const ChainSignature& source,
                                                const OperatorSpec& source_op,
                                                const ChainSignature& target,
                                                const OperatorSpec& target_op);

} // namespace statone
