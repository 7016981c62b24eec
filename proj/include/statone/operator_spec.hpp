#pragma once

#include <string>
#include <vector>

#include "statone/chain.hpp"
#include "statone/ideal.hpp"

namespace statone {

// Structural form of an idempotent coordinatewise endomorphism on a product of
// chains: coordinate j of the result reads coordinate sigma[j] of the input,
// with the value rescaled from denominator n_{sigma[j]} to n_j. The rescaling
// is exact precisely when n_{sigma[j]} divides n_j, which validation enforces.
struct OperatorSpec {
  std::vector<int> sigma;

  int coords() const { return static_cast<int>(sigma.size()); }
  bool operator==(const OperatorSpec&) const = default;
};

// Empty result means the spec is a valid idempotent operator for the
// signature; otherwise a human-readable diagnostic of the first failure.
std::string describe_spec_violation(const OperatorSpec& spec, const ChainSignature& sig);
// Throws std::invalid_argument with the diagnostic when invalid.
void require_spec(const OperatorSpec& spec, const ChainSignature& sig);

MvElement apply_endo(const OperatorSpec& spec, const ProductAlgebra& alg, const MvElement& a);

OperatorSpec identity_spec(const ChainSignature& sig);

// Kernel {a : tau(a) = 0} as a coordinate ideal, plus the image carrier
// (tau is idempotent, so the image is exactly the set of fixed points).
struct SpecKernelImage {
  CoordinateKernel kernel;
  std::vector<std::uint64_t> image; // ascending element ranks
};
SpecKernelImage kernel_and_image(const OperatorSpec& spec, const ProductAlgebra& alg);

// Coordinatewise homomorphism between products of chains. Target coordinate
// j' reads source coordinate mu[j']; exactness again requires that the source
// chain order divides the target chain order. Every such map preserves oplus,
// star, 0 and 1, because each coordinate is the unique chain homomorphism
// S_n -> S_m (numerator scaled by m/n).
struct AlgebraHom {
  std::vector<int> mu;

  int target_coords() const { return static_cast<int>(mu.size()); }
  bool operator==(const AlgebraHom&) const = default;
};

std::string describe_hom_violation(const AlgebraHom& hom, const ChainSignature& source,
                                   const ChainSignature& target);
void require_hom(const AlgebraHom& hom, const ChainSignature& source,
                 const ChainSignature& target);

MvElement apply_hom(const AlgebraHom& hom, const ProductAlgebra& source,
                    const ProductAlgebra& target, const MvElement& a);

AlgebraHom identity_hom(const ChainSignature& sig);

// second_after_first(a) = second(first(a)).
AlgebraHom compose_homs(const AlgebraHom& second, const AlgebraHom& first);

// True iff hom . source_op == target_op . hom as maps source -> target.
// For coordinatewise maps over chains with at least two elements this is
// equivalent to sigma(mu(j')) == mu(sigma'(j')) for every target coordinate.
bool commutes_with_operators(const AlgebraHom& hom, const OperatorSpec& source_op,
                             const OperatorSpec& target_op);

} // namespace statone
