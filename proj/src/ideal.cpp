#include "statone/ideal.hpp"

#include <numeric>

namespace statone {

bool CoordinateKernel::contains(const MvElement& a) const {
  for (int j : zero_coords) {
    if (a[static_cast<std::size_t>(j)] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> CoordinateKernel::members(const ProductAlgebra& alg) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    if (contains(alg.unrank(i))) {
      out.push_back(i);
    }
  }
  return out;
}

IdealReport maximal_ideals_and_radical(const ProductAlgebra& alg) {
  IdealReport report;
  const int k = alg.signature().coords();
  report.maximal.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    report.maximal.push_back(CoordinateKernel{{j}});
  }
  report.radical.zero_coords.resize(static_cast<std::size_t>(k));
  std::iota(report.radical.zero_coords.begin(), report.radical.zero_coords.end(), 0);
  return report;
}

} // namespace statone
