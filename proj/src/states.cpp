#include "statone/states.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace statone {

namespace {

const Rat kZero{0};
const Rat kOne{1};

Rat truncated_add(const Rat& x, const Rat& y) { return std::min(x + y, kOne); }

void record(std::vector<IdentityCheck>& checks, bool& pass, std::string name, bool ok,
            std::string detail = "") {
  checks.push_back({std::move(name), ok, std::move(detail)});
  pass = pass && ok;
}

} // namespace

void RationalState::validate() const {
  if (weights.empty()) {
    throw std::invalid_argument("state has no weights");
  }
  Rat total{0};
  for (const Rat& w : weights) {
    if (w < kZero) {
      throw std::invalid_argument("state weight is negative");
    }
    total += w;
  }
  if (total != kOne) {
    throw std::invalid_argument("state weights sum to " + format_rational(total) + ", not 1");
  }
}

std::vector<ExtremalState> extremal_states(const ProductAlgebra& alg) {
  const int k = alg.signature().coords();
  const std::uint64_t m = alg.size();
  for (int j = 0; j < k; ++j) {
    // Truncated additivity of the coordinate evaluation, swept over all pairs.
    for (std::uint64_t i1 = 0; i1 < m; ++i1) {
      MvElement a = alg.unrank(i1);
      for (std::uint64_t i2 = 0; i2 < m; ++i2) {
        MvElement b = alg.unrank(i2);
        Rat lhs = alg.value(alg.oplus(a, b), j);
        Rat rhs = truncated_add(alg.value(a, j), alg.value(b, j));
        if (lhs != rhs) {
          throw std::logic_error("coordinate evaluation violates truncated additivity");
        }
      }
    }
    // Its value set must be exactly the coordinate chain.
    std::set<Rat> values;
    for (std::uint64_t i = 0; i < m; ++i) {
      values.insert(alg.value(alg.unrank(i), j));
    }
    if (static_cast<int>(values.size()) != alg.signature().order(j) + 1) {
      throw std::logic_error("coordinate evaluation value set is not the full chain");
    }
    // Kernel is the coordinate kernel.
    for (std::uint64_t i = 0; i < m; ++i) {
      MvElement a = alg.unrank(i);
      bool in_kernel = alg.value(a, j) == kZero;
      if (in_kernel != (a[static_cast<std::size_t>(j)] == 0)) {
        throw std::logic_error("coordinate evaluation kernel mismatch");
      }
    }
  }
  std::vector<ExtremalState> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    out.push_back(ExtremalState{j});
  }
  return out;
}

Rat state_value(const RationalState& s, const ProductAlgebra& alg, const MvElement& a) {
  s.validate();
  alg.require_element(a);
  if (s.dim() != alg.signature().coords()) {
    throw std::invalid_argument("state dimension does not match the signature");
  }
  Rat total{0};
  for (int j = 0; j < s.dim(); ++j) {
    total += s.weights[static_cast<std::size_t>(j)] * alg.value(a, j);
  }
  return total;
}

AffineFunctionElement to_vertex_values(const ProductAlgebra& alg, const MvElement& a) {
  alg.require_element(a);
  AffineFunctionElement f;
  f.vertex_values.reserve(static_cast<std::size_t>(alg.signature().coords()));
  for (int j = 0; j < alg.signature().coords(); ++j) {
    f.vertex_values.push_back(alg.value(a, j));
  }
  return f;
}

RationalState AffineSelfMap::apply(const RationalState& s) const {
  s.validate();
  if (s.dim() != static_cast<int>(vertex_images.size())) {
    throw std::invalid_argument("state dimension does not match the self-map");
  }
  RationalState out;
  out.weights.assign(s.weights.size(), kZero);
  for (std::size_t j = 0; j < s.weights.size(); ++j) {
    out.weights[static_cast<std::size_t>(vertex_images[j])] += s.weights[j];
  }
  return out;
}

AffineSelfMap induced_state_map(const OperatorSpec& tau, const ProductAlgebra& alg) {
  require_spec(tau, alg.signature());
  // Side condition: for each extremal state e_j, the composed state e_j after
  // the operator takes values inside e_j's own value chain.
  for (int j = 0; j < alg.signature().coords(); ++j) {
    const int n = alg.signature().order(j);
    for (std::uint64_t i = 0; i < alg.size(); ++i) {
      Rat value = alg.value(apply_endo(tau, alg, alg.unrank(i)), j);
      Rat scaled = value * n;
      if (scaled.denominator() != 1) {
        throw std::logic_error("composed extremal state leaves its value chain");
      }
    }
  }
  return AffineSelfMap{tau.sigma};
}

bool AffineFunctionModel::contains(const AffineFunctionElement& f) const {
  if (f.dim() != signature.coords()) {
    return false;
  }
  for (int j = 0; j < signature.coords(); ++j) {
    Rat scaled = f.vertex_values[static_cast<std::size_t>(j)] * signature.order(j);
    if (scaled.denominator() != 1 || scaled < kZero || scaled > signature.order(j)) {
      return false;
    }
  }
  return true;
}

std::uint64_t AffineFunctionModel::size() const {
  std::uint64_t total = 1;
  for (int j = 0; j < signature.coords(); ++j) {
    total *= static_cast<std::uint64_t>(signature.order(j)) + 1;
  }
  return total;
}

AffineFunctionElement AffineFunctionModel::zero() const {
  return AffineFunctionElement{std::vector<Rat>(static_cast<std::size_t>(signature.coords()), kZero)};
}

AffineFunctionElement AffineFunctionModel::one() const {
  return AffineFunctionElement{std::vector<Rat>(static_cast<std::size_t>(signature.coords()), kOne)};
}

AffineFunctionElement AffineFunctionModel::oplus(const AffineFunctionElement& f,
                                                 const AffineFunctionElement& g) const {
  AffineFunctionElement out;
  out.vertex_values.reserve(f.vertex_values.size());
  for (std::size_t j = 0; j < f.vertex_values.size(); ++j) {
    out.vertex_values.push_back(truncated_add(f.vertex_values[j], g.vertex_values[j]));
  }
  return out;
}

AffineFunctionElement AffineFunctionModel::star(const AffineFunctionElement& f) const {
  AffineFunctionElement out;
  out.vertex_values.reserve(f.vertex_values.size());
  for (const Rat& v : f.vertex_values) {
    out.vertex_values.push_back(kOne - v);
  }
  return out;
}

AffineFunctionModel affine_function_model(const ProductAlgebra& alg) {
  return AffineFunctionModel{alg.signature()};
}

ModelReport verify_affine_function_model(const ProductAlgebra& alg) {
  AffineFunctionModel model = affine_function_model(alg);
  const std::uint64_t m = alg.size();
  ModelReport report;

  {
    bool ok = model.size() == m;
    record(report.checks, report.pass, "model and algebra have equal cardinality", ok);
  }
  {
    bool ok = true;
    std::string detail;
    std::set<std::vector<Rat>> seen;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      AffineFunctionElement f = to_vertex_values(alg, alg.unrank(i));
      if (!model.contains(f)) {
        ok = false;
        detail = "element " + std::to_string(i) + " maps outside the model";
      } else if (!seen.insert(f.vertex_values).second) {
        ok = false;
        detail = "element " + std::to_string(i) + " collides with an earlier image";
      }
    }
    // Injective with matching cardinalities => bijective onto the model.
    record(report.checks, report.pass, "vertex-value map is a bijection onto the model", ok,
           detail);
  }
  record(report.checks, report.pass, "vertex-value map sends 0 to 0",
         to_vertex_values(alg, alg.zero()) == model.zero());
  record(report.checks, report.pass, "vertex-value map sends 1 to 1",
         to_vertex_values(alg, alg.one()) == model.one());
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      MvElement a = alg.unrank(i);
      if (to_vertex_values(alg, alg.star(a)) != model.star(to_vertex_values(alg, a))) {
        ok = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(report.checks, report.pass, "vertex-value map preserves star", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      MvElement a = alg.unrank(i);
      AffineFunctionElement fa = to_vertex_values(alg, a);
      for (std::uint64_t j = 0; j < m; ++j) {
        MvElement b = alg.unrank(j);
        if (to_vertex_values(alg, alg.oplus(a, b)) != model.oplus(fa, to_vertex_values(alg, b))) {
          ok = false;
          detail = "elements " + std::to_string(i) + ", " + std::to_string(j);
          break;
        }
      }
    }
    record(report.checks, report.pass, "vertex-value map preserves oplus", ok, detail);
  }
  return report;
}

AffineFunctionElement AffineOperator::apply(const AffineFunctionElement& f) const {
  if (f.dim() != static_cast<int>(vertex_images.size())) {
    throw std::invalid_argument("function dimension does not match the operator");
  }
  AffineFunctionElement out;
  out.vertex_values.reserve(f.vertex_values.size());
  for (int image : vertex_images) {
    out.vertex_values.push_back(f.vertex_values[static_cast<std::size_t>(image)]);
  }
  return out;
}

IntertwineReport verify_intertwine(const ProductAlgebra& alg, const OperatorSpec& tau,
                                   std::uint64_t pair_sweep_cap) {
  require_spec(tau, alg.signature());
  AffineSelfMap state_map = induced_state_map(tau, alg);
  AffineOperator pullback{state_map.vertex_images};
  AffineFunctionModel model = affine_function_model(alg);
  const std::uint64_t m = alg.size();
  IntertwineReport report;

  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      MvElement a = alg.unrank(i);
      AffineFunctionElement lhs = to_vertex_values(alg, apply_endo(tau, alg, a));
      AffineFunctionElement rhs = pullback.apply(to_vertex_values(alg, a));
      if (lhs != rhs) {
        ok = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(report.checks, report.pass,
           "operator then vertex-value map equals vertex-value map then pullback", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      AffineFunctionElement f = to_vertex_values(alg, alg.unrank(i));
      if (pullback.apply(pullback.apply(f)) != pullback.apply(f)) {
        ok = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(report.checks, report.pass, "pullback operator is idempotent on the model", ok,
           detail);
  }
  record(report.checks, report.pass, "pullback operator fixes 0",
         pullback.apply(model.zero()) == model.zero());
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      AffineFunctionElement f = to_vertex_values(alg, alg.unrank(i));
      if (pullback.apply(model.star(f)) != model.star(pullback.apply(f))) {
        ok = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(report.checks, report.pass, "pullback operator preserves star", ok, detail);
  }
  if (m <= pair_sweep_cap) {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
      AffineFunctionElement f = to_vertex_values(alg, alg.unrank(i));
      for (std::uint64_t j = 0; j < m; ++j) {
        AffineFunctionElement g = to_vertex_values(alg, alg.unrank(j));
        if (pullback.apply(model.oplus(f, g)) != model.oplus(pullback.apply(f), pullback.apply(g))) {
          ok = false;
          detail = "elements " + std::to_string(i) + ", " + std::to_string(j);
          break;
        }
      }
    }
    record(report.checks, report.pass, "pullback operator preserves oplus", ok, detail);
  }
  return report;
}

std::vector<std::pair<Rat, ExtremalState>> discrete_state_decomposition(const RationalState& s) {
  s.validate();
  std::vector<std::pair<Rat, ExtremalState>> out;
  for (int j = 0; j < s.dim(); ++j) {
    const Rat& w = s.weights[static_cast<std::size_t>(j)];
    if (w > kZero) {
      out.emplace_back(w, ExtremalState{j});
    }
  }
  return out;
}

} // namespace statone
