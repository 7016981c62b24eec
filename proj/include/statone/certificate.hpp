#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace statone {

// One swept identity inside a duality certificate.
struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail; // first counterexample, or empty
};

// Round-trip evidence for the Boolean duality. Stores the input object, the
// induced dual object, the honestly recomputed round-trip object, and the
// witness isomorphism, so the swept identities can be re-verified from the
// certificate alone.
struct StoneCertificate {
  std::string side;                      // "algebra" or "space"
  // algebra side input: all-ones signature + operator map
  std::vector<int> input_orders;
  std::vector<int> input_sigma;
  // space side input: labeled points + idempotent self-map
  std::vector<std::string> input_points;
  std::vector<int> input_g;
  // induced dual object
  std::vector<std::string> dual_points; // algebra side: the point labels
  std::vector<int> dual_g;              //   ... and their self-map
  std::vector<int> dual_orders;         // space side: clopen-algebra signature
  std::vector<int> dual_sigma;          //   ... and its operator map
  // round-trip object's map, recomputed from the dual object
  std::vector<int> double_map;
  // witness isomorphism: u as clopen bitmask per element rank (algebra side),
  // v as dual-space point per input point (space side)
  std::vector<std::uint64_t> u;
  std::vector<int> v;
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

// Round-trip evidence for the simplex duality. Vertex maps are small, but the
// carrier of the function algebra is infinite, so the certificate additionally
// pins the sampled rational points/elements the identities were swept over.
struct BauerCertificate {
  std::string side; // "algebra" or "simplex"
  // algebra side input: cube dimension + operator map
  int input_dim = 0;
  std::vector<int> input_sigma;
  // simplex side input: vertex count + idempotent vertex map
  int input_vertices = 0;
  std::vector<int> input_g;
  // induced dual object and recomputed round-trip map
  int dual_vertices = 0;
  std::vector<int> dual_g;
  int dual_dim = 0;
  std::vector<int> dual_sigma;
  std::vector<int> double_map;
  // witness isomorphism onto the round-trip object, as a vertex/coordinate
  // map (the evaluation map on the simplex side, the vertex-value
  // identification on the algebra side)
  std::vector<int> witness;
  // sampled barycentric weight vectors (rows of "p/q" strings) the pointwise
  // identities were verified on, vertices first
  std::vector<std::vector<std::string>> sample_points;
  std::string object_class; // e.g. "divisible, finitely complete"
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

} // namespace statone
