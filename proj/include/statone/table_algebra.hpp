#ifndef STATONE_TABLE_ALGEBRA_HPP
#define STATONE_TABLE_ALGEBRA_HPP

#include "statone/chain.hpp"

#include <string>
#include <vector>

namespace statone {

/// Extensional form of a small MV-algebra: the full (+) table, the
/// complement vector and the zero index. Used for brute-force law
/// sweeps; carriers are capped well below general product sizes.
struct TableAlgebra {
  std::vector<std::vector<int>> oplus;
  std::vector<int> star;
  int zero = 0;

  int size() const { return static_cast<int>(star.size()); }
  int one() const { return star[static_cast<std::size_t>(zero)]; }

  int add(int x, int y) const {
    return oplus[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  int neg(int x) const { return star[static_cast<std::size_t>(x)]; }
  int mul(int x, int y) const { return neg(add(neg(x), neg(y))); }
  /// x v y = (x (*) y*) (+) y; with meet and order derived from it.
  int lattice_join(int x, int y) const { return add(mul(x, neg(y)), y); }
  int lattice_meet(int x, int y) const { return neg(lattice_join(neg(x), neg(y))); }
  bool leq(int x, int y) const { return lattice_join(x, y) == y; }

  /// Shape check: square closed tables, indices in range. Throws
  /// std::invalid_argument; laws are checked separately.
  void validate() const;
};

/// Materializes a product algebra as a table, elements in rank order.
/// Throws std::length_error when the carrier exceeds the cap.
TableAlgebra to_table(const ProductAlgebra& alg, std::uint64_t cap = 256);

struct LawCheck {
  std::string law;
  bool pass = true;
  std::string counterexample; // first violating tuple, empty when pass
};

struct MvAxiomReport {
  std::vector<LawCheck> laws;
  bool pass = true;

  const LawCheck* find(const std::string& law) const;
};

/// Sweeps every pair (and triple, for associativity) of the carrier
/// against the MV laws: commutative monoid with neutral 0, involution
/// of *, 1 absorbing, and the exchange law
/// x (+) (x (+) y*)* == y (+) (y (+) x*)*.
MvAxiomReport check_mv_axioms(const TableAlgebra& alg);

} // namespace statone

#endif
