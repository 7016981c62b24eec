#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "statone/certificate.hpp"
#include "statone/chain.hpp"
#include "statone/operator_spec.hpp"
#include "statone/rational.hpp"

namespace statone {

// State in barycentric coordinates over the coordinate-evaluation extremal
// states: s(a) = sum_j weights[j] * (a_j / n_j).
struct RationalState {
  std::vector<Rat> weights;

  int dim() const { return static_cast<int>(weights.size()); }
  void validate() const; // throws unless weights >= 0 and sum to 1
  bool operator==(const RationalState&) const = default;
};

// Extremal state = evaluation of one coordinate.
struct ExtremalState {
  int coordinate = 0;

  bool operator==(const ExtremalState&) const = default;
};

// The k coordinate evaluations, each verified by sweep: truncated additivity
// s(a oplus b) = min(s(a)+s(b), 1), value set exactly the coordinate chain,
// and kernel equal to the coordinate kernel. Cost O(k * m^2).
std::vector<ExtremalState> extremal_states(const ProductAlgebra& alg);

Rat state_value(const RationalState& s, const ProductAlgebra& alg, const MvElement& a);

// Vertex-value vector (a_0/n_0, ..., a_{k-1}/n_{k-1}) of an element: the
// affine function induced on the state simplex, stored by vertex data.
struct AffineFunctionElement {
  std::vector<Rat> vertex_values;

  int dim() const { return static_cast<int>(vertex_values.size()); }
  bool operator==(const AffineFunctionElement&) const = default;
};
AffineFunctionElement to_vertex_values(const ProductAlgebra& alg, const MvElement& a);

// Affine self-map of the state simplex determined by a vertex map; states are
// pushed forward: result weight at i is the sum of weights j with image i.
struct AffineSelfMap {
  std::vector<int> vertex_images;

  RationalState apply(const RationalState& s) const;
};

// g(s) = s after the operator: on vertices e_j -> e_{sigma(j)}. Also verifies
// the side condition that every extremal state's composed value set stays
// inside that state's own value chain.
AffineSelfMap induced_state_map(const OperatorSpec& tau, const ProductAlgebra& alg);

// Finite model of the algebra by affine functions on the state simplex:
// vertex-value vectors whose j-th value lies in the j-th coordinate chain.
struct AffineFunctionModel {
  ChainSignature signature;

  bool contains(const AffineFunctionElement& f) const;
  std::uint64_t size() const;
  AffineFunctionElement zero() const;
  AffineFunctionElement one() const;
  AffineFunctionElement oplus(const AffineFunctionElement& f,
                              const AffineFunctionElement& g) const;
  AffineFunctionElement star(const AffineFunctionElement& f) const;
};
AffineFunctionModel affine_function_model(const ProductAlgebra& alg);

// Sweeps establishing that the vertex-value map is a bijective homomorphism
// onto the model (injective + image membership + cardinality + operations).
struct ModelReport {
  std::vector<IdentityCheck> checks;
  bool pass = true;
};
ModelReport verify_affine_function_model(const ProductAlgebra& alg);

// Pullback operator f -> f after the vertex self-map: out_j = in_{sigma(j)}.
struct AffineOperator {
  std::vector<int> vertex_images;

  AffineFunctionElement apply(const AffineFunctionElement& f) const;
};

// Builds the pullback operator of the induced state map and verifies that it
// matches the original operator through the vertex-value map on every
// element; the morphism-property sweep over model pairs runs only when the
// carrier is at most pair_sweep_cap elements.
struct IntertwineReport {
  std::vector<IdentityCheck> checks;
  bool pass = true;
};
IntertwineReport verify_intertwine(const ProductAlgebra& alg, const OperatorSpec& tau,
                                   std::uint64_t pair_sweep_cap = 256);

std::vector<std::pair<Rat, ExtremalState>> discrete_state_decomposition(const RationalState& s);

} // namespace statone
