#pragma once

#include <cstdint>
#include <vector>

#include "statone/chain.hpp"

namespace statone {

// Ideal of a finite product of chains, described structurally: the set of
// elements whose listed coordinates are all zero. Every maximal ideal is the
// kernel of one coordinate projection, and the radical (intersection of all
// maximal ideals) pins every coordinate to zero.
struct CoordinateKernel {
  std::vector<int> zero_coords; // sorted, duplicate-free coordinate indices

  bool contains(const MvElement& a) const;
  // Explicit member ranks, ascending. Only sensible for small carriers.
  std::vector<std::uint64_t> members(const ProductAlgebra& alg) const;
};

struct IdealReport {
  std::vector<CoordinateKernel> maximal; // one kernel per coordinate
  CoordinateKernel radical;              // all coordinates zero => {0}
};

IdealReport maximal_ideals_and_radical(const ProductAlgebra& alg);

} // namespace statone
