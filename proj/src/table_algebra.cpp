#include "statone/table_algebra.hpp"

#include <stdexcept>

namespace statone {

namespace {

std::string pair_text(int x, int y) {
  return "x=" + std::to_string(x) + ", y=" + std::to_string(y);
}

} // namespace

void TableAlgebra::validate() const {
  const int m = size();
  if (m == 0) {
    throw std::invalid_argument("empty carrier");
  }
  if (static_cast<int>(oplus.size()) != m) {
    throw std::invalid_argument("oplus table is not m x m");
  }
  for (const auto& row : oplus) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("oplus table is not m x m");
    }
    for (int v : row) {
      if (v < 0 || v >= m) {
        throw std::invalid_argument("oplus entry outside carrier");
      }
    }
  }
  for (int v : star) {
    if (v < 0 || v >= m) {
      throw std::invalid_argument("star entry outside carrier");
    }
  }
  if (zero < 0 || zero >= m) {
    throw std::invalid_argument("zero index outside carrier");
  }
}

TableAlgebra to_table(const ProductAlgebra& alg, std::uint64_t cap) {
  if (alg.size() > cap) {
    throw std::length_error("carrier of " + std::to_string(alg.size()) +
                            " elements exceeds table cap " + std::to_string(cap));
  }
  const int m = static_cast<int>(alg.size());
  TableAlgebra table;
  table.oplus.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  table.star.resize(static_cast<std::size_t>(m));
  table.zero = static_cast<int>(alg.rank(alg.zero()));
  for (int i = 0; i < m; ++i) {
    MvElement a = alg.unrank(static_cast<std::uint64_t>(i));
    table.star[static_cast<std::size_t>(i)] = static_cast<int>(alg.rank(alg.star(a)));
    for (int j = 0; j < m; ++j) {
      MvElement b = alg.unrank(static_cast<std::uint64_t>(j));
      table.oplus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(alg.rank(alg.oplus(a, b)));
    }
  }
  return table;
}

const LawCheck* MvAxiomReport::find(const std::string& law) const {
  for (const auto& check : laws) {
    if (check.law == law) {
      return &check;
    }
  }
  return nullptr;
}

MvAxiomReport check_mv_axioms(const TableAlgebra& alg) {
  alg.validate();
  const int m = alg.size();
  const int zero = alg.zero;
  const int one = alg.one();
  MvAxiomReport report;

  auto record = [&report](std::string law, bool pass, std::string witness) {
    report.laws.push_back({std::move(law), pass, std::move(witness)});
    report.pass = report.pass && report.laws.back().pass;
  };

  {
    LawCheck law{"oplus commutative", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        if (alg.add(x, y) != alg.add(y, x)) {
          law = {law.law, false, pair_text(x, y)};
          break;
        }
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"oplus associative", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m && law.pass; ++y) {
        for (int z = 0; z < m; ++z) {
          if (alg.add(alg.add(x, y), z) != alg.add(x, alg.add(y, z))) {
            law = {law.law, false, pair_text(x, y) + ", z=" + std::to_string(z)};
            break;
          }
        }
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"zero neutral", true, ""};
    for (int x = 0; x < m; ++x) {
      if (alg.add(x, zero) != x) {
        law = {law.law, false, "x=" + std::to_string(x)};
        break;
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"star involution", true, ""};
    for (int x = 0; x < m; ++x) {
      if (alg.neg(alg.neg(x)) != x) {
        law = {law.law, false, "x=" + std::to_string(x)};
        break;
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"x oplus 1 = 1", true, ""};
    for (int x = 0; x < m; ++x) {
      if (alg.add(x, one) != one) {
        law = {law.law, false, "x=" + std::to_string(x)};
        break;
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  {
    // x (+) (x (+) y*)* == y (+) (y (+) x*)*
    LawCheck law{"exchange", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        int lhs = alg.add(x, alg.neg(alg.add(x, alg.neg(y))));
        int rhs = alg.add(y, alg.neg(alg.add(y, alg.neg(x))));
        if (lhs != rhs) {
          law = {law.law, false, pair_text(x, y)};
          break;
        }
      }
    }
    record(law.law, law.pass, law.counterexample);
  }
  return report;
}

} // namespace statone
