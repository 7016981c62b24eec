#include "statone/state_checks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace statone {

namespace {

std::string at_x(int x) { return "x=" + std::to_string(x); }
std::string at_xy(int x, int y) {
  return "x=" + std::to_string(x) + ", y=" + std::to_string(y);
}

void require_table(const TableAlgebra& alg, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != alg.size()) {
    throw std::invalid_argument("unary table size does not match carrier");
  }
  for (int v : values) {
    if (v < 0 || v >= alg.size()) {
      throw std::invalid_argument("unary table entry outside carrier");
    }
  }
}

} // namespace

UnaryTable identity_table(int m) {
  UnaryTable t;
  t.values.resize(static_cast<std::size_t>(m));
  std::iota(t.values.begin(), t.values.end(), 0);
  return t;
}

UnaryTable table_of_spec(const OperatorSpec& spec, const ProductAlgebra& alg, std::uint64_t cap) {
  require_spec(spec, alg.signature());
  if (alg.size() > cap) {
    throw std::length_error("carrier of " + std::to_string(alg.size()) +
                            " elements exceeds table cap " + std::to_string(cap));
  }
  UnaryTable t;
  t.values.reserve(alg.size());
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    t.values.push_back(static_cast<int>(alg.rank(apply_endo(spec, alg, alg.unrank(i)))));
  }
  return t;
}

const LawCheck* StateOperatorReport::find(const std::string& law) const {
  for (const auto& check : axioms) {
    if (check.law == law) {
      return &check;
    }
  }
  for (const auto& check : derived) {
    if (check.law == law) {
      return &check;
    }
  }
  return nullptr;
}

StateOperatorReport check_state_operator_axioms(const TableAlgebra& alg, const UnaryTable& t) {
  alg.validate();
  require_table(alg, t.values);
  const int m = alg.size();
  auto tau = [&t](int x) { return t.apply(x); };
  StateOperatorReport report;

  auto record_axiom = [&report](std::string law, bool pass, std::string witness) {
    report.axioms.push_back({std::move(law), pass, std::move(witness)});
    report.pass = report.pass && report.axioms.back().pass;
  };
  auto record_derived = [&report](std::string law, bool pass, std::string witness) {
    report.derived.push_back({std::move(law), pass, std::move(witness)});
  };

  {
    bool pass = tau(alg.zero) == alg.zero;
    record_axiom("t(0)=0", pass, pass ? "" : "t(0)=" + std::to_string(tau(alg.zero)));
  }
  {
    LawCheck law{"t(x*)=t(x)*", true, ""};
    for (int x = 0; x < m; ++x) {
      if (tau(alg.neg(x)) != alg.neg(tau(x))) {
        law = {law.law, false, at_x(x)};
        break;
      }
    }
    record_axiom(law.law, law.pass, law.counterexample);
  }
  {
    // t(x (+) y) = t(x) (+) t(y (.) (x (.) y)*)
    LawCheck law{"t(x oplus y)=t(x) oplus t(y odot (x odot y)*)", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        int lhs = tau(alg.add(x, y));
        int rhs = alg.add(tau(x), tau(alg.mul(y, alg.neg(alg.mul(x, y)))));
        if (lhs != rhs) {
          law = {law.law, false, at_xy(x, y)};
          break;
        }
      }
    }
    record_axiom(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"t(t(x) oplus t(y))=t(x) oplus t(y)", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        int img = alg.add(tau(x), tau(y));
        if (tau(img) != img) {
          law = {law.law, false, at_xy(x, y)};
          break;
        }
      }
    }
    record_axiom(law.law, law.pass, law.counterexample);
  }

  {
    LawCheck law{"t idempotent", true, ""};
    for (int x = 0; x < m; ++x) {
      if (tau(tau(x)) != tau(x)) {
        law = {law.law, false, at_x(x)};
        break;
      }
    }
    record_derived(law.law, law.pass, law.counterexample);
  }
  {
    bool pass = tau(alg.one()) == alg.one();
    record_derived("t(1)=1", pass, pass ? "" : "t(1)=" + std::to_string(tau(alg.one())));
  }
  {
    LawCheck law{"t monotone", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        if (alg.leq(x, y) && !alg.leq(tau(x), tau(y))) {
          law = {law.law, false, at_xy(x, y)};
          break;
        }
      }
    }
    record_derived(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"t subadditive", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        if (!alg.leq(tau(alg.add(x, y)), alg.add(tau(x), tau(y)))) {
          law = {law.law, false, at_xy(x, y)};
          break;
        }
      }
    }
    record_derived(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"image closed under oplus", true, ""};
    for (int x = 0; x < m && law.pass; ++x) {
      for (int y = 0; y < m; ++y) {
        int img = alg.add(tau(x), tau(y));
        if (tau(img) != img) {
          law = {law.law, false, at_xy(x, y)};
          break;
        }
      }
    }
    record_derived(law.law, law.pass, law.counterexample);
  }
  {
    LawCheck law{"image closed under star", true, ""};
    for (int x = 0; x < m; ++x) {
      int img = alg.neg(tau(x));
      if (tau(img) != img) {
        law = {law.law, false, at_x(x)};
        break;
      }
    }
    record_derived(law.law, law.pass, law.counterexample);
  }
  return report;
}

bool is_state_operator(const TableAlgebra& alg, const std::vector<int>& values) {
  const int m = alg.size();
  if (values[static_cast<std::size_t>(alg.zero)] != alg.zero) {
    return false;
  }
  for (int x = 0; x < m; ++x) {
    if (values[static_cast<std::size_t>(alg.neg(x))] !=
        alg.neg(values[static_cast<std::size_t>(x)])) {
      return false;
    }
  }
  for (int x = 0; x < m; ++x) {
    const int tx = values[static_cast<std::size_t>(x)];
    for (int y = 0; y < m; ++y) {
      const int ty = values[static_cast<std::size_t>(y)];
      const int img = alg.add(tx, ty);
      if (values[static_cast<std::size_t>(img)] != img) {
        return false;
      }
      const int rest = values[static_cast<std::size_t>(alg.mul(y, alg.neg(alg.mul(x, y))))];
      if (values[static_cast<std::size_t>(alg.add(x, y))] != alg.add(tx, rest)) {
        return false;
      }
    }
  }
  return true;
}

bool is_state_morphism(const TableAlgebra& alg, const std::vector<int>& values) {
  const int m = alg.size();
  if (values[static_cast<std::size_t>(alg.zero)] != alg.zero) {
    return false;
  }
  for (int x = 0; x < m; ++x) {
    const int tx = values[static_cast<std::size_t>(x)];
    if (values[static_cast<std::size_t>(tx)] != tx) {
      return false;
    }
    if (values[static_cast<std::size_t>(alg.neg(x))] != alg.neg(tx)) {
      return false;
    }
    for (int y = 0; y < m; ++y) {
      if (values[static_cast<std::size_t>(alg.add(x, y))] !=
          alg.add(tx, values[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

TableKernelImage kernel_and_image(const TableAlgebra& alg, const UnaryTable& t) {
  alg.validate();
  require_table(alg, t.values);
  TableKernelImage out;
  for (int x = 0; x < alg.size(); ++x) {
    if (t.apply(x) == alg.zero) {
      out.kernel.push_back(x);
    }
    out.image.push_back(t.apply(x));
  }
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
  return out;
}

} // namespace statone
