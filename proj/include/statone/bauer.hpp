#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statone/certificate.hpp"
#include "statone/operator_spec.hpp"
#include "statone/rational.hpp"
#include "statone/states.hpp"

namespace statone {

// Standard simplex with an idempotent self-map: the map is stored by its
// action on vertices and extended affinely (weights push forward).
struct BauerObject {
  int vertices = 0;
  std::vector<int> g;
  std::vector<std::string> labels; // optional; empty = unlabeled

  void validate() const; // throws std::invalid_argument
};

// Element of the divisible algebra of affine functions on a simplex, stored
// by vertex values: a rational vector inside the unit cube.
using CubeElement = std::vector<Rat>;

// Rational unit cube with coordinatewise truncated operations. Unlike finite
// chains it is weakly divisible (v = 1/n works for every n), though only
// finitely complete: suprema of infinite sequences may be irrational.
struct RationalCubeAlgebra {
  int dimension = 0;

  void require_element(const CubeElement& x) const;
  CubeElement zero() const;
  CubeElement one() const;
  CubeElement oplus(const CubeElement& x, const CubeElement& y) const;
  CubeElement star(const CubeElement& x) const;
  CubeElement odot(const CubeElement& x, const CubeElement& y) const;
  // Partial addition, defined only when x odot y = 0.
  std::optional<CubeElement> plus(const CubeElement& x, const CubeElement& y) const;
  std::optional<CubeElement> nmul(int n, const CubeElement& x) const;
  // The witness v with n*v = 1, verified through nmul before returning.
  std::optional<CubeElement> weak_divisibility_witness(int n) const;
};

// Operator specs over a cube need no divisibility side condition (every
// coordinate carries the same dense chain); only range and idempotence.
void require_cube_spec(const OperatorSpec& spec, int dimension);
CubeElement apply_cube_operator(const OperatorSpec& spec, const RationalCubeAlgebra& cube,
                                const CubeElement& x);
CubeElement apply_cube_hom(const AlgebraHom& hom, const RationalCubeAlgebra& source,
                           const RationalCubeAlgebra& target, const CubeElement& x);

// Affine map between simplices; vertices land on vertices, general points
// push their weights forward.
struct BauerMorphism {
  std::vector<int> vertex_images;
  int target_vertex_count = 0;

  RationalState apply(const RationalState& s) const;
  bool operator==(const BauerMorphism&) const = default;
};

bool is_bauer_morphism(const BauerMorphism& p, const BauerObject& source,
                       const BauerObject& target);
BauerMorphism compose_bauer_morphisms(const BauerMorphism& second, const BauerMorphism& first);
BauerMorphism identity_bauer_morphism(const BauerObject& obj);

// Simplex -> algebra functor half: the function algebra is the cube over the
// vertex count, the operator is pullback along the self-map.
struct InducedFunctionAlgebra {
  RationalCubeAlgebra algebra;
  OperatorSpec tau;
};
InducedFunctionAlgebra to_function_algebra(const BauerObject& obj);

// Algebra -> simplex functor half: vertices are the coordinate evaluation
// states, the self-map composes a state with the operator. The vertex map is
// recovered honestly by evaluating composed states on indicator functions.
BauerObject to_state_simplex(const RationalCubeAlgebra& cube, const OperatorSpec& tau);

// Morphism halves (contravariant). For a hom h between cubes, states of the
// target compose with h and push back to states of the source; for a simplex
// morphism p, functions on the target compose with p.
BauerMorphism simplex_morphism_of_hom(const AlgebraHom& h, const RationalCubeAlgebra& source,
                                      const OperatorSpec& source_op,
                                      const RationalCubeAlgebra& target,
                                      const OperatorSpec& target_op);
AlgebraHom hom_of_simplex_morphism(const BauerMorphism& p, const BauerObject& source,
                                   const BauerObject& target);

// Canonical comparison morphism from an object to the simplex of its function
// algebra: a point goes to the state evaluating functions at that point.
BauerMorphism evaluation_map(const BauerObject& obj);

// Round-trip verification, exact at vertices and at `samples` pseudo-random
// rational interior points (deterministic for a fixed seed).
BauerCertificate verify_bauer_duality(const BauerObject& obj, int samples = 100,
                                      std::uint64_t seed = 2026);
BauerCertificate verify_bauer_duality(const RationalCubeAlgebra& cube, const OperatorSpec& tau,
                                      int samples = 100, std::uint64_t seed = 2026);

// Re-run every identity recorded in a certificate from its stored data only.
std::vector<std::string> replay_bauer_certificate(const BauerCertificate& cert);

} // namespace statone
