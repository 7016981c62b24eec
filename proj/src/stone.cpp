#include "statone/stone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "statone/enumerate.hpp"

namespace statone {

namespace {

// Element of an all-ones product <-> clopen bitmask over its atoms.
ClopenSet element_mask(const MvElement& a) {
  ClopenSet mask = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 1) {
      mask |= ClopenSet{1} << j;
    }
  }
  return mask;
}

MvElement mask_element(ClopenSet mask, int atoms) {
  MvElement a(static_cast<std::size_t>(atoms));
  for (int j = 0; j < atoms; ++j) {
    a[static_cast<std::size_t>(j)] = static_cast<int>((mask >> j) & 1);
  }
  return a;
}

void require_boolean(const ProductAlgebra& alg) {
  if (!alg.signature().is_boolean()) {
    throw std::invalid_argument("algebra is not Boolean: some chain order exceeds 1");
  }
  if (alg.signature().coords() > 16) {
    throw CapExceeded("clopen-set sweeps support at most 16 atoms, got " +
                      std::to_string(alg.signature().coords()));
  }
}

std::string index_label(int i) { return std::to_string(i); }

} // namespace

void StoneStatePair::validate() const {
  if (points.empty()) {
    throw std::invalid_argument("space has no points");
  }
  if (points.size() > 64) {
    throw std::invalid_argument("space has more than 64 points");
  }
  std::set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size()) {
    throw std::invalid_argument("point labels are not distinct");
  }
  if (g.size() != points.size()) {
    throw std::invalid_argument("self-map size does not match point count");
  }
  for (int image : g) {
    if (image < 0 || image >= size()) {
      throw std::invalid_argument("self-map image outside the point set");
    }
  }
  for (int x = 0; x < size(); ++x) {
    const int gx = g[static_cast<std::size_t>(x)];
    if (g[static_cast<std::size_t>(gx)] != gx) {
      throw std::invalid_argument("self-map is not idempotent: g(g(" + std::to_string(x) +
                                  ")) = " + std::to_string(g[static_cast<std::size_t>(gx)]) +
                                  " but g(" + std::to_string(x) + ") = " + std::to_string(gx));
    }
  }
}

bool is_space_morphism(const SpaceMorphism& f, const StoneStatePair& source,
                       const StoneStatePair& target) {
  source.validate();
  target.validate();
  if (static_cast<int>(f.f.size()) != source.size()) {
    return false;
  }
  for (int image : f.f) {
    if (image < 0 || image >= target.size()) {
      return false;
    }
  }
  for (int x = 0; x < source.size(); ++x) {
    const int via_source = f.f[static_cast<std::size_t>(source.g[static_cast<std::size_t>(x)])];
    const int via_target = target.g[static_cast<std::size_t>(f.f[static_cast<std::size_t>(x)])];
    if (via_source != via_target) {
      return false;
    }
  }
  return true;
}

SpaceMorphism compose_space_morphisms(const SpaceMorphism& second, const SpaceMorphism& first) {
  SpaceMorphism out;
  out.f.reserve(first.f.size());
  for (int image : first.f) {
    out.f.push_back(second.f.at(static_cast<std::size_t>(image)));
  }
  return out;
}

bool in_ultrafilter(const MvElement& a, int atom) {
  return a.at(static_cast<std::size_t>(atom)) == 1;
}

UltrafilterPresentation stone_space(const ProductAlgebra& alg) {
  require_boolean(alg);
  UltrafilterPresentation out;
  out.atom_count = alg.signature().coords();
  out.u.reserve(alg.size());
  for (std::uint64_t i = 0; i < alg.size(); ++i) {
    MvElement a = alg.unrank(i);
    ClopenSet mask = 0;
    for (int atom = 0; atom < out.atom_count; ++atom) {
      if (in_ultrafilter(a, atom)) {
        mask |= ClopenSet{1} << atom;
      }
    }
    out.u.push_back(mask);
  }
  return out;
}

StoneStatePair to_state_space(const ProductAlgebra& alg, const OperatorSpec& tau) {
  require_boolean(alg);
  require_spec(tau, alg.signature());
  const int atoms = alg.signature().coords();
  const std::uint64_t m = alg.size();

  // Membership table: member[x][i] says whether element i lies in the
  // principal ultrafilter at atom x.
  std::vector<std::vector<char>> member(static_cast<std::size_t>(atoms),
                                        std::vector<char>(m, 0));
  std::vector<std::vector<char>> preimage(static_cast<std::size_t>(atoms),
                                          std::vector<char>(m, 0));
  for (std::uint64_t i = 0; i < m; ++i) {
    MvElement a = alg.unrank(i);
    MvElement ta = apply_endo(tau, alg, a);
    for (int x = 0; x < atoms; ++x) {
      member[static_cast<std::size_t>(x)][i] = in_ultrafilter(a, x) ? 1 : 0;
      preimage[static_cast<std::size_t>(x)][i] = in_ultrafilter(ta, x) ? 1 : 0;
    }
  }

  StoneStatePair pair;
  pair.points.reserve(static_cast<std::size_t>(atoms));
  pair.g.assign(static_cast<std::size_t>(atoms), -1);
  for (int x = 0; x < atoms; ++x) {
    pair.points.push_back(index_label(x));
    // The operator preimage of an ultrafilter is again an ultrafilter; find
    // which principal one it is by comparing membership functions.
    for (int y = 0; y < atoms; ++y) {
      if (preimage[static_cast<std::size_t>(x)] == member[static_cast<std::size_t>(y)]) {
        pair.g[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (pair.g[static_cast<std::size_t>(x)] < 0) {
      throw std::logic_error("operator preimage of ultrafilter " + std::to_string(x) +
                             " is not an ultrafilter");
    }
  }
  pair.validate();
  return pair;
}

InducedStateAlgebra to_state_algebra(const StoneStatePair& pair) {
  pair.validate();
  const int n = pair.size();
  std::vector<int> orders(static_cast<std::size_t>(n), 1);
  InducedStateAlgebra out{ChainSignature{orders}, OperatorSpec{pair.g}};
  require_spec(out.tau, out.signature);

  // The structural operator must act as A -> g^{-1}(A) on clopen sets. Verify
  // extensionally: over every clopen set when the space is small, otherwise
  // over the singletons (both maps preserve finite unions and complements, so
  // singleton agreement already determines them).
  ProductAlgebra alg{out.signature};
  auto check_mask = [&](ClopenSet set) {
    ClopenSet direct = 0;
    for (int x = 0; x < n; ++x) {
      if ((set >> pair.g[static_cast<std::size_t>(x)]) & 1) {
        direct |= ClopenSet{1} << x;
      }
    }
    ClopenSet structural = element_mask(apply_endo(out.tau, alg, mask_element(set, n)));
    if (direct != structural) {
      throw std::logic_error("operator does not act as the self-map preimage on clopen sets");
    }
  };
  if (n <= 16) {
    for (ClopenSet set = 0; set < (ClopenSet{1} << n); ++set) {
      check_mask(set);
    }
  } else {
    for (int x = 0; x < n; ++x) {
      check_mask(ClopenSet{1} << x);
    }
  }
  return out;
}

SpaceMorphism space_morphism_of_hom(const AlgebraHom& h, const ProductAlgebra& source,
                                    const ProductAlgebra& target) {
  require_boolean(source);
  require_boolean(target);
  require_hom(h, source.signature(), target.signature());
  const int source_atoms = source.signature().coords();
  const int target_atoms = target.signature().coords();
  const std::uint64_t m = source.size();

  std::vector<std::vector<char>> member(static_cast<std::size_t>(source_atoms),
                                        std::vector<char>(m, 0));
  std::vector<std::vector<char>> preimage(static_cast<std::size_t>(target_atoms),
                                          std::vector<char>(m, 0));
  for (std::uint64_t i = 0; i < m; ++i) {
    MvElement a = source.unrank(i);
    MvElement ha = apply_hom(h, source, target, a);
    for (int x = 0; x < source_atoms; ++x) {
      member[static_cast<std::size_t>(x)][i] = in_ultrafilter(a, x) ? 1 : 0;
    }
    for (int y = 0; y < target_atoms; ++y) {
      preimage[static_cast<std::size_t>(y)][i] = in_ultrafilter(ha, y) ? 1 : 0;
    }
  }

  SpaceMorphism f;
  f.f.assign(static_cast<std::size_t>(target_atoms), -1);
  for (int y = 0; y < target_atoms; ++y) {
    for (int x = 0; x < source_atoms; ++x) {
      if (preimage[static_cast<std::size_t>(y)] == member[static_cast<std::size_t>(x)]) {
        f.f[static_cast<std::size_t>(y)] = x;
        break;
      }
    }
    if (f.f[static_cast<std::size_t>(y)] < 0) {
      throw std::logic_error("hom preimage of ultrafilter " + std::to_string(y) +
                             " is not an ultrafilter");
    }
  }
  return f;
}

AlgebraHom hom_of_space_morphism(const SpaceMorphism& f, const StoneStatePair& source,
                                 const StoneStatePair& target) {
  if (static_cast<int>(f.f.size()) != source.size()) {
    throw std::invalid_argument("morphism size does not match source point count");
  }
  source.validate();
  target.validate();
  for (int image : f.f) {
    if (image < 0 || image >= target.size()) {
      throw std::invalid_argument("morphism image outside the target point set");
    }
  }

  // Induced hom maps clopen sets of the target space to clopen sets of the
  // source space by preimage; coordinatewise that reads source-space point x
  // from target-space point f(x).
  AlgebraHom hom{f.f};
  const int n = source.size();
  const int np = target.size();
  if (np <= 16) {
    ProductAlgebra source_alg{ChainSignature{std::vector<int>(static_cast<std::size_t>(np), 1)}};
    ProductAlgebra target_alg{ChainSignature{std::vector<int>(static_cast<std::size_t>(n), 1)}};
    for (ClopenSet set = 0; set < (ClopenSet{1} << np); ++set) {
      ClopenSet direct = 0;
      for (int x = 0; x < n; ++x) {
        if ((set >> f.f[static_cast<std::size_t>(x)]) & 1) {
          direct |= ClopenSet{1} << x;
        }
      }
      ClopenSet structural =
          element_mask(apply_hom(hom, source_alg, target_alg, mask_element(set, np)));
      if (direct != structural) {
        throw std::logic_error("induced hom does not act as the morphism preimage");
      }
    }
  }
  return hom;
}

ImagePreimageReport image_and_preimage_characterizations(const ProductAlgebra& alg,
                                                         const OperatorSpec& tau) {
  require_boolean(alg);
  require_spec(tau, alg.signature());
  const int atoms = alg.signature().coords();
  StoneStatePair pair = to_state_space(alg, tau);
  MvElement zero = alg.zero();

  ImagePreimageReport report;
  report.pass = true;
  for (int x = 0; x < atoms; ++x) {
    UltrafilterFact fact;
    fact.atom = x;
    for (int h = 0; h < atoms; ++h) {
      if (pair.g[static_cast<std::size_t>(h)] == x) {
        fact.in_image = true;
        fact.g_preimage.push_back(h);
      }
    }
    // Disjointness from the kernel, swept over raw elements.
    fact.kernel_disjoint = true;
    for (std::uint64_t i = 0; i < alg.size(); ++i) {
      MvElement a = alg.unrank(i);
      if (in_ultrafilter(a, x) && apply_endo(tau, alg, a) == zero) {
        fact.kernel_disjoint = false;
        break;
      }
    }
    // Atoms whose ultrafilter contains the operator image of this one.
    for (int h = 0; h < atoms; ++h) {
      bool contains = true;
      for (std::uint64_t i = 0; i < alg.size() && contains; ++i) {
        MvElement a = alg.unrank(i);
        if (in_ultrafilter(a, x) && !in_ultrafilter(apply_endo(tau, alg, a), h)) {
          contains = false;
        }
      }
      if (contains) {
        fact.contains_tau_image.push_back(h);
      }
    }
    bool ok = (fact.in_image == fact.kernel_disjoint) &&
              (fact.g_preimage == fact.contains_tau_image);
    report.pass = report.pass && ok;
    report.facts.push_back(std::move(fact));
  }
  return report;
}

namespace {

void record(StoneCertificate& cert, std::string name, bool pass, std::string detail = "") {
  cert.checks.push_back({std::move(name), pass, std::move(detail)});
  cert.pass = cert.pass && pass;
}

} // namespace

StoneCertificate verify_stone_duality(const ProductAlgebra& alg, const OperatorSpec& tau) {
  require_boolean(alg);
  require_spec(tau, alg.signature());
  StoneCertificate cert;
  cert.pass = true;
  cert.side = "algebra";
  cert.input_orders = alg.signature().orders();
  cert.input_sigma = tau.sigma;

  UltrafilterPresentation uf = stone_space(alg);
  StoneStatePair pair = to_state_space(alg, tau);
  InducedStateAlgebra induced = to_state_algebra(pair);
  cert.dual_points = pair.points;
  cert.dual_g = pair.g;
  cert.double_map = induced.tau.sigma;
  cert.u = uf.u;

  const int atoms = uf.atom_count;
  const std::uint64_t m = alg.size();
  ProductAlgebra clopen_alg{induced.signature};

  {
    std::vector<ClopenSet> seen = uf.u;
    std::sort(seen.begin(), seen.end());
    bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    bool onto = seen.size() == clopen_alg.size() &&
                (seen.empty() || seen.back() < (ClopenSet{1} << atoms));
    record(cert, "u is a bijection onto the clopen sets", distinct && onto);
  }
  record(cert, "u(0) is the empty set", uf.u[alg.rank(alg.zero())] == 0);
  record(cert, "u(1) is the full space",
         uf.u[alg.rank(alg.one())] == (ClopenSet{1} << atoms) - 1);
  {
    bool pass = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && pass; ++i) {
      MvElement a = alg.unrank(i);
      ClopenSet su = element_mask(clopen_alg.star(mask_element(uf.u[i], atoms)));
      if (su != uf.u[alg.rank(alg.star(a))]) {
        pass = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(cert, "u(a*) = u(a)*", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && pass; ++i) {
      for (std::uint64_t j = 0; j < m; ++j) {
        ClopenSet sum = element_mask(clopen_alg.oplus(mask_element(uf.u[i], atoms),
                                                      mask_element(uf.u[j], atoms)));
        MvElement ab = alg.oplus(alg.unrank(i), alg.unrank(j));
        if (sum != uf.u[alg.rank(ab)]) {
          pass = false;
          detail = "elements " + std::to_string(i) + ", " + std::to_string(j);
          break;
        }
      }
    }
    record(cert, "u(a oplus b) = u(a) oplus u(b)", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (std::uint64_t i = 0; i < m && pass; ++i) {
      MvElement a = alg.unrank(i);
      ClopenSet lhs = uf.u[alg.rank(apply_endo(tau, alg, a))];
      ClopenSet rhs =
          element_mask(apply_endo(induced.tau, clopen_alg, mask_element(uf.u[i], atoms)));
      if (lhs != rhs) {
        pass = false;
        detail = "element " + std::to_string(i);
      }
    }
    record(cert, "u(t(a)) = s_g(u(a))", pass, detail);
  }
  record(cert, "round-trip operator equals input operator", cert.double_map == tau.sigma);
  return cert;
}

StoneCertificate verify_stone_duality(const StoneStatePair& pair) {
  pair.validate();
  StoneCertificate cert;
  cert.pass = true;
  cert.side = "space";
  cert.input_points = pair.points;
  cert.input_g = pair.g;

  InducedStateAlgebra induced = to_state_algebra(pair);
  ProductAlgebra clopen_alg{induced.signature};
  StoneStatePair double_pair = to_state_space(clopen_alg, induced.tau);
  cert.dual_orders = induced.signature.orders();
  cert.dual_sigma = induced.tau.sigma;
  cert.double_map = double_pair.g;

  const int n = pair.size();
  // v(x) is the family of clopen sets containing x; match it against the
  // principal ultrafilters of the clopen algebra by membership sweep.
  cert.v.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool match = true;
      for (std::uint64_t i = 0; i < clopen_alg.size() && match; ++i) {
        MvElement a = clopen_alg.unrank(i);
        bool x_in_set = ((element_mask(a) >> x) & 1) != 0;
        if (x_in_set != in_ultrafilter(a, y)) {
          match = false;
        }
      }
      if (match) {
        cert.v[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
  }

  {
    bool total = true;
    for (int image : cert.v) {
      total = total && image >= 0;
    }
    std::vector<int> seen = cert.v;
    std::sort(seen.begin(), seen.end());
    bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    record(cert, "v is a bijection onto the dual points",
           total && distinct && static_cast<int>(seen.size()) == double_pair.size());
  }
  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < n; ++x) {
      int lhs = cert.v[static_cast<std::size_t>(pair.g[static_cast<std::size_t>(x)])];
      int rhs = double_pair.g[static_cast<std::size_t>(cert.v[static_cast<std::size_t>(x)])];
      if (lhs != rhs) {
        pass = false;
        detail = "point " + std::to_string(x);
        break;
      }
    }
    record(cert, "v(g(x)) = g''(v(x))", pass, detail);
  }
  record(cert, "round-trip self-map equals input self-map", double_pair.g == pair.g);
  return cert;
}

namespace {

bool idempotent_vector(const std::vector<int>& g) {
  const int n = static_cast<int>(g.size());
  for (int x = 0; x < n; ++x) {
    const int gx = g[static_cast<std::size_t>(x)];
    if (gx < 0 || gx >= n || g[static_cast<std::size_t>(gx)] != gx) {
      return false;
    }
  }
  return true;
}

} // namespace

std::vector<std::string> replay_stone_certificate(const StoneCertificate& cert) {
  std::vector<std::string> failures;
  auto fail = [&failures](const std::string& what) { failures.push_back(what); };

  if (cert.side == "algebra") {
    const int atoms = static_cast<int>(cert.input_orders.size());
    if (atoms < 1 || atoms > 16) {
      fail("atom count out of range");
      return failures;
    }
    for (int order : cert.input_orders) {
      if (order != 1) {
        fail("input signature is not Boolean");
        return failures;
      }
    }
    if (static_cast<int>(cert.input_sigma.size()) != atoms ||
        static_cast<int>(cert.dual_g.size()) != atoms ||
        static_cast<int>(cert.double_map.size()) != atoms) {
      fail("operator/self-map sizes do not match the atom count");
      return failures;
    }
    if (!idempotent_vector(cert.input_sigma)) {
      fail("input operator map is not idempotent");
    }
    if (!idempotent_vector(cert.dual_g)) {
      fail("dual self-map is not idempotent");
    }
    if (!failures.empty()) {
      return failures;
    }
    const std::uint64_t m = std::uint64_t{1} << atoms;
    if (cert.u.size() != m) {
      fail("witness u does not cover the carrier");
      return failures;
    }
    // Re-derive every swept identity from the stored witness alone. The
    // element with rank i has coordinate j equal to bit j of i.
    std::vector<ClopenSet> seen(cert.u);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen.back() >= m) {
      fail("witness u is not a bijection onto the clopen sets");
    }
    auto tau_of = [&cert, atoms](std::uint64_t a) {
      std::uint64_t out = 0;
      for (int j = 0; j < atoms; ++j) {
        out |= ((a >> cert.input_sigma[static_cast<std::size_t>(j)]) & 1) << j;
      }
      return out;
    };
    auto s_g = [&cert, atoms](ClopenSet set) {
      ClopenSet out = 0;
      for (int x = 0; x < atoms; ++x) {
        if ((set >> cert.dual_g[static_cast<std::size_t>(x)]) & 1) {
          out |= ClopenSet{1} << x;
        }
      }
      return out;
    };
    if (cert.u[0] != 0) {
      fail("u(0) is not the empty set");
    }
    if (cert.u[m - 1] != m - 1) {
      fail("u(1) is not the full space");
    }
    for (std::uint64_t a = 0; a < m; ++a) {
      if (cert.u[static_cast<std::size_t>(~a & (m - 1))] != (~cert.u[static_cast<std::size_t>(a)] & (m - 1))) {
        fail("u(a*) = u(a)* fails at element " + std::to_string(a));
        break;
      }
    }
    for (std::uint64_t a = 0; a < m; ++a) {
      bool broken = false;
      for (std::uint64_t b = 0; b < m; ++b) {
        if (cert.u[static_cast<std::size_t>(a | b)] !=
            (cert.u[static_cast<std::size_t>(a)] | cert.u[static_cast<std::size_t>(b)])) {
          fail("u(a oplus b) = u(a) oplus u(b) fails at (" + std::to_string(a) + ", " +
               std::to_string(b) + ")");
          broken = true;
          break;
        }
      }
      if (broken) {
        break;
      }
    }
    for (std::uint64_t a = 0; a < m; ++a) {
      if (cert.u[static_cast<std::size_t>(tau_of(a))] != s_g(cert.u[static_cast<std::size_t>(a)])) {
        fail("u(t(a)) = s_g(u(a)) fails at element " + std::to_string(a));
        break;
      }
    }
    if (cert.double_map != cert.input_sigma) {
      fail("round-trip operator differs from the input operator");
    }
  } else if (cert.side == "space") {
    const int n = static_cast<int>(cert.input_points.size());
    if (n < 1 || n > 16) {
      fail("point count out of range");
      return failures;
    }
    if (static_cast<int>(cert.input_g.size()) != n ||
        static_cast<int>(cert.dual_sigma.size()) != n ||
        static_cast<int>(cert.double_map.size()) != n ||
        static_cast<int>(cert.v.size()) != n) {
      fail("self-map/operator sizes do not match the point count");
      return failures;
    }
    if (!idempotent_vector(cert.input_g)) {
      fail("input self-map is not idempotent");
    }
    if (cert.dual_sigma != cert.input_g) {
      fail("dual operator map differs from the self-map preimage form");
    }
    std::vector<int> seen = cert.v;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen.front() < 0 ||
        seen.back() >= n) {
      fail("witness v is not a bijection onto the dual points");
    }
    if (!failures.empty()) {
      return failures;
    }
    for (int x = 0; x < n; ++x) {
      int lhs = cert.v[static_cast<std::size_t>(cert.input_g[static_cast<std::size_t>(x)])];
      int rhs = cert.double_map[static_cast<std::size_t>(cert.v[static_cast<std::size_t>(x)])];
      if (lhs != rhs) {
        fail("v(g(x)) = g''(v(x)) fails at point " + std::to_string(x));
        break;
      }
    }
    if (cert.double_map != cert.input_g) {
      fail("round-trip self-map differs from the input self-map");
    }
  } else {
    fail("unknown certificate side: " + cert.side);
  }
  return failures;
}

} // namespace statone
