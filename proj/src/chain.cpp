#include "statone/chain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace statone {

ChainSignature::ChainSignature(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) {
    throw std::invalid_argument("signature needs at least one chain");
  }
  for (int n : orders_) {
    if (n < 1) {
      throw std::invalid_argument("chain order must be >= 1, got " + std::to_string(n));
    }
  }
}

bool ChainSignature::is_boolean() const {
  return std::all_of(orders_.begin(), orders_.end(), [](int n) { return n == 1; });
}

std::uint64_t ChainSignature::element_count() const {
  std::uint64_t count = 1;
  for (int n : orders_) {
    std::uint64_t factor = static_cast<std::uint64_t>(n) + 1;
    if (count > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("element count overflow");
    }
    count *= factor;
  }
  return count;
}

MvElement ProductAlgebra::zero() const {
  return MvElement(static_cast<std::size_t>(coords()), 0);
}

MvElement ProductAlgebra::one() const {
  MvElement top(static_cast<std::size_t>(coords()));
  for (int j = 0; j < coords(); ++j) {
    top[static_cast<std::size_t>(j)] = sig_.order(j);
  }
  return top;
}

void ProductAlgebra::require_element(const MvElement& a) const {
  if (static_cast<int>(a.size()) != coords()) {
    throw std::invalid_argument("element has " + std::to_string(a.size()) +
                                " coordinates, signature has " + std::to_string(coords()));
  }
  for (int j = 0; j < coords(); ++j) {
    int num = a[static_cast<std::size_t>(j)];
    if (num < 0 || num > sig_.order(j)) {
      throw std::invalid_argument("coordinate " + std::to_string(j) + " numerator " +
                                  std::to_string(num) + " outside 0.." +
                                  std::to_string(sig_.order(j)));
    }
  }
}

MvElement ProductAlgebra::oplus(const MvElement& a, const MvElement& b) const {
  require_element(a);
  require_element(b);
  MvElement out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = std::min(a[j] + b[j], sig_.order(static_cast<int>(j)));
  }
  return out;
}

MvElement ProductAlgebra::star(const MvElement& a) const {
  require_element(a);
  MvElement out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = sig_.order(static_cast<int>(j)) - a[j];
  }
  return out;
}

MvElement ProductAlgebra::odot(const MvElement& a, const MvElement& b) const {
  return star(oplus(star(a), star(b)));
}

MvElement ProductAlgebra::join(const MvElement& a, const MvElement& b) const {
  require_element(a);
  require_element(b);
  MvElement out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = std::max(a[j], b[j]);
  }
  return out;
}

MvElement ProductAlgebra::meet(const MvElement& a, const MvElement& b) const {
  require_element(a);
  require_element(b);
  MvElement out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = std::min(a[j], b[j]);
  }
  return out;
}

bool ProductAlgebra::leq(const MvElement& a, const MvElement& b) const {
  require_element(a);
  require_element(b);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) {
      return false;
    }
  }
  return true;
}

bool ProductAlgebra::is_boolean_element(const MvElement& a) const {
  require_element(a);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0 && a[j] != sig_.order(static_cast<int>(j))) {
      return false;
    }
  }
  return true;
}

std::optional<MvElement> ProductAlgebra::plus(const MvElement& a, const MvElement& b) const {
  if (odot(a, b) != zero()) {
    return std::nullopt;
  }
  return oplus(a, b);
}

std::optional<MvElement> ProductAlgebra::nmul(int n, const MvElement& a) const {
  if (n < 0) {
    throw std::invalid_argument("nmul needs n >= 0");
  }
  require_element(a);
  MvElement acc = zero();
  for (int step = 0; step < n; ++step) {
    auto next = plus(acc, a);
    if (!next) {
      return std::nullopt;
    }
    acc = std::move(*next);
  }
  return acc;
}

std::optional<MvElement> ProductAlgebra::weak_divisibility_witness(int n) const {
  const MvElement top = one();
  for (std::uint64_t i = 0; i < size(); ++i) {
    MvElement v = unrank(i);
    auto scaled = nmul(n, v);
    if (scaled && *scaled == top) {
      return v;
    }
  }
  return std::nullopt;
}

Rat ProductAlgebra::value(const MvElement& a, int j) const {
  require_element(a);
  return Rat(a[static_cast<std::size_t>(j)], sig_.order(j));
}

std::uint64_t ProductAlgebra::rank(const MvElement& a) const {
  require_element(a);
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  for (int j = 0; j < coords(); ++j) {
    index += weight * static_cast<std::uint64_t>(a[static_cast<std::size_t>(j)]);
    weight *= static_cast<std::uint64_t>(sig_.order(j)) + 1;
  }
  return index;
}

MvElement ProductAlgebra::unrank(std::uint64_t index) const {
  if (index >= size()) {
    throw std::out_of_range("element index " + std::to_string(index) + " >= " +
                            std::to_string(size()));
  }
  MvElement out(static_cast<std::size_t>(coords()));
  for (int j = 0; j < coords(); ++j) {
    std::uint64_t radix = static_cast<std::uint64_t>(sig_.order(j)) + 1;
    out[static_cast<std::size_t>(j)] = static_cast<int>(index % radix);
    index /= radix;
  }
  return out;
}

std::vector<MvElement> ProductAlgebra::elements() const {
  std::vector<MvElement> all;
  all.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t i = 0; i < size(); ++i) {
    all.push_back(unrank(i));
  }
  return all;
}

} // namespace statone
