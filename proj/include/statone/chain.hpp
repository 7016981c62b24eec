#ifndef STATONE_CHAIN_HPP
#define STATONE_CHAIN_HPP

#include "statone/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace statone {

/// Orders [n_1 .. n_k] of a finite product of Lukasiewicz chains.
/// Chain j is {0, 1/n_j, ..., 1}; the all-ones signature is a Boolean
/// algebra with one atom per coordinate.
class ChainSignature {
public:
  explicit ChainSignature(std::vector<int> orders);

  int coords() const { return static_cast<int>(orders_.size()); }
  int order(int j) const { return orders_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& orders() const { return orders_; }

  bool is_boolean() const;
  std::uint64_t element_count() const;

  bool operator==(const ChainSignature& other) const = default;

private:
  std::vector<int> orders_;
};

/// Element of a product algebra, stored as per-coordinate numerators:
/// the value at coordinate j is num[j] / n_j. Compared structurally.
using MvElement = std::vector<int>;

/// Exact arithmetic over a finite product of chains. All operations are
/// pure; elements are validated against the signature and a mismatch is
/// a hard error (std::invalid_argument).
class ProductAlgebra {
public:
  explicit ProductAlgebra(ChainSignature sig) : sig_(std::move(sig)) {}

  const ChainSignature& signature() const { return sig_; }
  int coords() const { return sig_.coords(); }
  std::uint64_t size() const { return sig_.element_count(); }
  bool is_boolean() const { return sig_.is_boolean(); }

  MvElement zero() const;
  MvElement one() const;

  /// Throws std::invalid_argument unless a is a well-formed element
  /// of this algebra (length k, 0 <= num_j <= n_j).
  void require_element(const MvElement& a) const;

  /// Truncated sum: coordinatewise min(a_j + b_j, n_j).
  MvElement oplus(const MvElement& a, const MvElement& b) const;
  /// Complement: coordinatewise n_j - a_j.
  MvElement star(const MvElement& a) const;
  /// a (*) b = (a* (+) b*)*.
  MvElement odot(const MvElement& a, const MvElement& b) const;
  MvElement join(const MvElement& a, const MvElement& b) const;
  MvElement meet(const MvElement& a, const MvElement& b) const;
  bool leq(const MvElement& a, const MvElement& b) const;

  /// a (+) a == a, i.e. every coordinate is 0 or n_j.
  bool is_boolean_element(const MvElement& a) const;

  /// Partial addition: defined iff a (*) b == 0, then equal to a (+) b.
  std::optional<MvElement> plus(const MvElement& a, const MvElement& b) const;

  /// n-fold partial sum n.a, built inductively from plus; nullopt as soon
  /// as one inductive step is undefined. n >= 0.
  std::optional<MvElement> nmul(int n, const MvElement& a) const;

  /// Weak divisibility probe: some v with n.v == 1, found by exhausting
  /// the carrier. nullopt when no such v exists.
  std::optional<MvElement> weak_divisibility_witness(int n) const;

  /// Value of coordinate j as an exact rational in [0,1].
  Rat value(const MvElement& a, int j) const;

  /// Elements are indexed 0..size()-1 in mixed radix with coordinate 0
  /// as the least significant digit; rank(zero()) == 0.
  std::uint64_t rank(const MvElement& a) const;
  MvElement unrank(std::uint64_t index) const;
  std::vector<MvElement> elements() const;

private:
  ChainSignature sig_;
};

} // namespace statone

#endif
