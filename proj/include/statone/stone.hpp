#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "statone/certificate.hpp"
#include "statone/chain.hpp"
#include "statone/operator_spec.hpp"

namespace statone {

// Clopen subset of a finite discrete space, bit x set iff point x belongs.
using ClopenSet = std::uint64_t;

// Finite Stone space with an idempotent continuous self-map (continuity is
// automatic on a finite discrete space).
struct StoneStatePair {
  std::vector<std::string> points; // labels; the point id is the index
  std::vector<int> g;              // idempotent self-map over point ids

  int size() const { return static_cast<int>(points.size()); }
  void validate() const; // throws std::invalid_argument
};

// Map between the underlying spaces of two pairs: point i of the source goes
// to f[i] in the target. Morphisms additionally satisfy f.g = g'.f, which
// is checked where morphisms are consumed, not by the bare struct.
struct SpaceMorphism {
  std::vector<int> f;

  bool operator==(const SpaceMorphism&) const = default;
};

bool is_space_morphism(const SpaceMorphism& f, const StoneStatePair& source,
                       const StoneStatePair& target);
SpaceMorphism compose_space_morphisms(const SpaceMorphism& second, const SpaceMorphism& first);

// Ultrafilter presentation of an all-Boolean product algebra: one principal
// ultrafilter per atom (= coordinate), and u(a) = {F : a in F} per element.
struct UltrafilterPresentation {
  int atom_count = 0;
  std::vector<ClopenSet> u; // indexed by element rank
};
UltrafilterPresentation stone_space(const ProductAlgebra& alg);

// Membership a in F_atom, i.e. coordinate `atom` of a is 1.
bool in_ultrafilter(const MvElement& a, int atom);

// Object half of the algebra -> space functor: points are the ultrafilters,
// g(F) = preimage of F under the operator. Each preimage is matched against
// the principal ultrafilters by an element sweep; failure to match any is an
// error (cannot happen for a valid operator).
StoneStatePair to_state_space(const ProductAlgebra& alg, const OperatorSpec& tau);

// Object half of the space -> algebra functor: the clopen-set algebra (an
// all-ones product over |points| atoms) with the operator A -> g^{-1}(A),
// returned structurally and verified extensionally over all clopen sets.
struct InducedStateAlgebra {
  ChainSignature signature; // all-ones, one coordinate per point
  OperatorSpec tau;
};
InducedStateAlgebra to_state_algebra(const StoneStatePair& pair);

// Morphism halves (both functors are contravariant). For a hom h: B -> B',
// the induced map sends an ultrafilter F' of B' to h^{-1}(F'), a point of
// the space of B; computed by preimage matching, not assumed structural.
SpaceMorphism space_morphism_of_hom(const AlgebraHom& h, const ProductAlgebra& source,
                                    const ProductAlgebra& target);
// For f: (points,g) -> (points',g'), the induced hom sends a clopen set A' to
// f^{-1}(A'); returned as a coordinatewise hom and verified over all clopen
// sets of the target space.
AlgebraHom hom_of_space_morphism(const SpaceMorphism& f, const StoneStatePair& source,
                                 const StoneStatePair& target);

// For every ultrafilter F: F lies in the image of g iff F is disjoint from
// Ker(tau), and the g-preimage of F is exactly {H : H contains tau(F)}.
struct UltrafilterFact {
  int atom = 0;
  bool in_image = false;
  bool kernel_disjoint = false;
  std::vector<int> g_preimage;         // atoms H with g(H) = F
  std::vector<int> contains_tau_image; // atoms H whose filter contains tau(F)
};
struct ImagePreimageReport {
  std::vector<UltrafilterFact> facts;
  bool pass = false;
};
ImagePreimageReport image_and_preimage_characterizations(const ProductAlgebra& alg,
                                                         const OperatorSpec& tau);

// Full round-trip verification. The algebra side builds the dual pair and the
// double-dual algebra and sweeps the witness u (bijective hom intertwining
// the operators); the space side does the same with v over points.
StoneCertificate verify_stone_duality(const ProductAlgebra& alg, const OperatorSpec& tau);
StoneCertificate verify_stone_duality(const StoneStatePair& pair);

// Re-run every identity recorded in a certificate from its stored data only.
// Returns the list of failures (empty = certificate verifies).
std::vector<std::string> replay_stone_certificate(const StoneCertificate& cert);

} // namespace statone
