#include "statone/enumerate.hpp"

#include <string>

namespace statone {

namespace {

// Advance a base-`base` odometer with digits[0] most significant; returns
// false once the vector wraps past the last value.
bool next_vector(std::vector<int>& digits, int base) {
  for (std::size_t pos = digits.size(); pos > 0; --pos) {
    int& d = digits[pos - 1];
    if (++d < base) {
      return true;
    }
    d = 0;
  }
  return false;
}

template <typename Keep>
std::vector<UnaryTable> sweep_tables(const TableAlgebra& alg, std::uint64_t max_elements,
                                     Keep keep) {
  alg.validate();
  const int m = alg.size();
  if (static_cast<std::uint64_t>(m) > max_elements) {
    throw CapExceeded("carrier of " + std::to_string(m) + " elements exceeds sweep cap " +
                      std::to_string(max_elements));
  }
  std::vector<UnaryTable> found;
  std::vector<int> values(static_cast<std::size_t>(m), 0);
  do {
    if (keep(alg, values)) {
      found.push_back(UnaryTable{values});
    }
  } while (next_vector(values, m));
  return found;
}

} // namespace

std::vector<std::vector<int>> idempotent_self_maps(int k) {
  std::vector<std::vector<int>> found;
  std::vector<int> f(static_cast<std::size_t>(k), 0);
  do {
    bool idempotent = true;
    for (int j = 0; j < k; ++j) {
      const int s = f[static_cast<std::size_t>(j)];
      if (f[static_cast<std::size_t>(s)] != s) {
        idempotent = false;
        break;
      }
    }
    if (idempotent) {
      found.push_back(f);
    }
  } while (next_vector(f, k));
  return found;
}

std::vector<OperatorSpec> enumerate_state_morphism_operators(const ChainSignature& sig) {
  std::vector<OperatorSpec> found;
  const int k = sig.coords();
  std::vector<int> sigma(static_cast<std::size_t>(k), 0);
  do {
    OperatorSpec spec{sigma};
    if (describe_spec_violation(spec, sig).empty()) {
      found.push_back(std::move(spec));
    }
  } while (next_vector(sigma, k));
  return found;
}

std::vector<UnaryTable> enumerate_state_operator_tables(const TableAlgebra& alg,
                                                        std::uint64_t max_elements) {
  return sweep_tables(alg, max_elements,
                      [](const TableAlgebra& a, const std::vector<int>& values) {
                        return is_state_operator(a, values);
                      });
}

std::vector<UnaryTable> enumerate_state_morphism_tables(const TableAlgebra& alg,
                                                        std::uint64_t max_elements) {
  return sweep_tables(alg, max_elements,
                      [](const TableAlgebra& a, const std::vector<int>& values) {
                        return is_state_morphism(a, values);
                      });
}

std::vector<AlgebraHom> enumerate_operator_homs(const ChainSignature& source,
                                                const OperatorSpec& source_op,
                                                const ChainSignature& target,
                                                const OperatorSpec& target_op) {
  require_spec(source_op, source);
  require_spec(target_op, target);
  std::vector<AlgebraHom> found;
  std::vector<int> mu(static_cast<std::size_t>(target.coords()), 0);
  do {
    AlgebraHom hom{mu};
    if (describe_hom_violation(hom, source, target).empty() &&
        commutes_with_operators(hom, source_op, target_op)) {
      found.push_back(std::move(hom));
    }
  } while (next_vector(mu, source.coords()));
  return found;
}

} // namespace statone
