#include "statone/bauer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace statone {

namespace {

const Rat kZero{0};
const Rat kOne{1};

constexpr const char* kObjectClass = "divisible, finitely complete";

// Deterministic across platforms: the engine is fully specified by the
// standard, the (mildly biased) modulo draw avoids unspecified distributions.
int next_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RationalState random_interior_state(std::mt19937_64& rng, int k) {
  std::vector<int> parts(static_cast<std::size_t>(k));
  int total = 0;
  for (int& part : parts) {
    part = next_int(rng, 1, 9);
    total += part;
  }
  RationalState s;
  s.weights.reserve(parts.size());
  for (int part : parts) {
    s.weights.emplace_back(part, total);
  }
  return s;
}

CubeElement random_cube_element(std::mt19937_64& rng, int k) {
  CubeElement x;
  x.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    int den = next_int(rng, 1, 9);
    x.emplace_back(next_int(rng, 0, den), den);
  }
  return x;
}

Rat random_mix_ratio(std::mt19937_64& rng) {
  int den = next_int(rng, 2, 9);
  return Rat{next_int(rng, 1, den - 1), den};
}

std::vector<std::string> format_row(const std::vector<Rat>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (const Rat& v : values) {
    row.push_back(format_rational(v));
  }
  return row;
}

void record(BauerCertificate& cert, std::string name, bool ok, std::string detail = "") {
  cert.checks.push_back({std::move(name), ok, std::move(detail)});
  cert.pass = cert.pass && ok;
}

void require_idempotent_map(const std::vector<int>& g, int count, const std::string& what) {
  if (static_cast<int>(g.size()) != count) {
    throw std::invalid_argument(what + " size does not match");
  }
  for (int image : g) {
    if (image < 0 || image >= count) {
      throw std::invalid_argument(what + " image out of range");
    }
  }
  for (int x = 0; x < count; ++x) {
    const int gx = g[static_cast<std::size_t>(x)];
    if (g[static_cast<std::size_t>(gx)] != gx) {
      throw std::invalid_argument(what + " is not idempotent at " + std::to_string(x));
    }
  }
}

CubeElement indicator(int dim, int at) {
  CubeElement x(static_cast<std::size_t>(dim), kZero);
  x[static_cast<std::size_t>(at)] = kOne;
  return x;
}

RationalState vertex_state(int dim, int at) {
  RationalState s;
  s.weights.assign(static_cast<std::size_t>(dim), kZero);
  s.weights[static_cast<std::size_t>(at)] = kOne;
  return s;
}

RationalState mix_states(const Rat& ratio, const RationalState& a, const RationalState& b) {
  RationalState out;
  out.weights.reserve(a.weights.size());
  for (std::size_t j = 0; j < a.weights.size(); ++j) {
    out.weights.push_back(ratio * a.weights[j] + (kOne - ratio) * b.weights[j]);
  }
  return out;
}

} // namespace

void BauerObject::validate() const {
  if (vertices < 1) {
    throw std::invalid_argument("simplex needs at least one vertex");
  }
  require_idempotent_map(g, vertices, "vertex self-map");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != vertices) {
      throw std::invalid_argument("label count does not match the vertex count");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != vertices) {
      throw std::invalid_argument("vertex labels are not distinct");
    }
  }
}

void RationalCubeAlgebra::require_element(const CubeElement& x) const {
  if (static_cast<int>(x.size()) != dimension) {
    throw std::invalid_argument("element dimension does not match the cube");
  }
  for (const Rat& v : x) {
    if (v < kZero || v > kOne) {
      throw std::invalid_argument("coordinate " + format_rational(v) + " outside [0,1]");
    }
  }
}

CubeElement RationalCubeAlgebra::zero() const {
  return CubeElement(static_cast<std::size_t>(dimension), kZero);
}

CubeElement RationalCubeAlgebra::one() const {
  return CubeElement(static_cast<std::size_t>(dimension), kOne);
}

CubeElement RationalCubeAlgebra::oplus(const CubeElement& x, const CubeElement& y) const {
  require_element(x);
  require_element(y);
  CubeElement out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out.push_back(std::min(x[j] + y[j], kOne));
  }
  return out;
}

CubeElement RationalCubeAlgebra::star(const CubeElement& x) const {
  require_element(x);
  CubeElement out;
  out.reserve(x.size());
  for (const Rat& v : x) {
    out.push_back(kOne - v);
  }
  return out;
}

CubeElement RationalCubeAlgebra::odot(const CubeElement& x, const CubeElement& y) const {
  return star(oplus(star(x), star(y)));
}

std::optional<CubeElement> RationalCubeAlgebra::plus(const CubeElement& x,
                                                     const CubeElement& y) const {
  if (odot(x, y) != zero()) {
    return std::nullopt;
  }
  CubeElement out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out.push_back(x[j] + y[j]);
  }
  return out;
}

std::optional<CubeElement> RationalCubeAlgebra::nmul(int n, const CubeElement& x) const {
  require_element(x);
  if (n < 0) {
    return std::nullopt;
  }
  CubeElement acc = zero();
  for (int step = 0; step < n; ++step) {
    std::optional<CubeElement> next = plus(acc, x);
    if (!next) {
      return std::nullopt;
    }
    acc = std::move(*next);
  }
  return acc;
}

std::optional<CubeElement> RationalCubeAlgebra::weak_divisibility_witness(int n) const {
  if (n < 1) {
    return std::nullopt;
  }
  CubeElement v(static_cast<std::size_t>(dimension), Rat{1, n});
  std::optional<CubeElement> total = nmul(n, v);
  if (!total || *total != one()) {
    return std::nullopt;
  }
  return v;
}

void require_cube_spec(const OperatorSpec& spec, int dimension) {
  require_idempotent_map(spec.sigma, dimension, "operator map");
}

CubeElement apply_cube_operator(const OperatorSpec& spec, const RationalCubeAlgebra& cube,
                                const CubeElement& x) {
  require_cube_spec(spec, cube.dimension);
  cube.require_element(x);
  CubeElement out;
  out.reserve(x.size());
  for (int image : spec.sigma) {
    out.push_back(x[static_cast<std::size_t>(image)]);
  }
  return out;
}

CubeElement apply_cube_hom(const AlgebraHom& hom, const RationalCubeAlgebra& source,
                           const RationalCubeAlgebra& target, const CubeElement& x) {
  source.require_element(x);
  if (hom.target_coords() != target.dimension) {
    throw std::invalid_argument("homomorphism map size does not match the target cube");
  }
  CubeElement out;
  out.reserve(hom.mu.size());
  for (int image : hom.mu) {
    if (image < 0 || image >= source.dimension) {
      throw std::invalid_argument("homomorphism image out of range");
    }
    out.push_back(x[static_cast<std::size_t>(image)]);
  }
  return out;
}

RationalState BauerMorphism::apply(const RationalState& s) const {
  s.validate();
  if (s.dim() != static_cast<int>(vertex_images.size())) {
    throw std::invalid_argument("state dimension does not match the morphism");
  }
  RationalState out;
  out.weights.assign(static_cast<std::size_t>(target_vertex_count), kZero);
  for (std::size_t j = 0; j < s.weights.size(); ++j) {
    const int image = vertex_images[j];
    if (image < 0 || image >= target_vertex_count) {
      throw std::invalid_argument("morphism vertex image out of range");
    }
    out.weights[static_cast<std::size_t>(image)] += s.weights[j];
  }
  return out;
}

bool is_bauer_morphism(const BauerMorphism& p, const BauerObject& source,
                       const BauerObject& target) {
  source.validate();
  target.validate();
  if (static_cast<int>(p.vertex_images.size()) != source.vertices ||
      p.target_vertex_count != target.vertices) {
    return false;
  }
  for (int image : p.vertex_images) {
    if (image < 0 || image >= target.vertices) {
      return false;
    }
  }
  for (int x = 0; x < source.vertices; ++x) {
    const int via_source = p.vertex_images[static_cast<std::size_t>(source.g[static_cast<std::size_t>(x)])];
    const int via_target = target.g[static_cast<std::size_t>(p.vertex_images[static_cast<std::size_t>(x)])];
    if (via_source != via_target) {
      return false;
    }
  }
  return true;
}

BauerMorphism compose_bauer_morphisms(const BauerMorphism& second, const BauerMorphism& first) {
  BauerMorphism out;
  out.target_vertex_count = second.target_vertex_count;
  out.vertex_images.reserve(first.vertex_images.size());
  for (int image : first.vertex_images) {
    out.vertex_images.push_back(second.vertex_images.at(static_cast<std::size_t>(image)));
  }
  return out;
}

BauerMorphism identity_bauer_morphism(const BauerObject& obj) {
  obj.validate();
  BauerMorphism p;
  p.target_vertex_count = obj.vertices;
  p.vertex_images.resize(static_cast<std::size_t>(obj.vertices));
  for (int j = 0; j < obj.vertices; ++j) {
    p.vertex_images[static_cast<std::size_t>(j)] = j;
  }
  return p;
}

InducedFunctionAlgebra to_function_algebra(const BauerObject& obj) {
  obj.validate();
  InducedFunctionAlgebra out{RationalCubeAlgebra{obj.vertices}, OperatorSpec{obj.g}};
  require_cube_spec(out.tau, out.algebra.dimension);
  return out;
}

namespace {

// Barycentric weights of the state (composed state, pushed state, ...) read
// off by evaluating on the indicator functions; must be a vertex indicator.
int match_vertex(const std::vector<Rat>& weights) {
  int vertex = -1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == kOne && vertex < 0) {
      vertex = static_cast<int>(i);
    } else if (weights[i] != kZero) {
      return -1;
    }
  }
  return vertex;
}

} // namespace

BauerObject to_state_simplex(const RationalCubeAlgebra& cube, const OperatorSpec& tau) {
  require_cube_spec(tau, cube.dimension);
  BauerObject obj;
  obj.vertices = cube.dimension;
  obj.g.assign(static_cast<std::size_t>(cube.dimension), -1);
  for (int j = 0; j < cube.dimension; ++j) {
    // Weights of the composed state: coordinate evaluation j after tau,
    // evaluated on each indicator function.
    std::vector<Rat> weights;
    weights.reserve(static_cast<std::size_t>(cube.dimension));
    for (int i = 0; i < cube.dimension; ++i) {
      weights.push_back(
          apply_cube_operator(tau, cube, indicator(cube.dimension, i))[static_cast<std::size_t>(j)]);
    }
    const int vertex = match_vertex(weights);
    if (vertex < 0) {
      throw std::logic_error("composed coordinate evaluation is not a vertex state");
    }
    obj.g[static_cast<std::size_t>(j)] = vertex;
  }
  obj.validate();
  return obj;
}

BauerMorphism simplex_morphism_of_hom(const AlgebraHom& h, const RationalCubeAlgebra& source,
                                      const OperatorSpec& source_op,
                                      const RationalCubeAlgebra& target,
                                      const OperatorSpec& target_op) {
  require_cube_spec(source_op, source.dimension);
  require_cube_spec(target_op, target.dimension);
  if (h.target_coords() != target.dimension) {
    throw std::invalid_argument("homomorphism map size does not match the target cube");
  }
  for (int image : h.mu) {
    if (image < 0 || image >= source.dimension) {
      throw std::invalid_argument("homomorphism image out of range");
    }
  }
  if (!commutes_with_operators(h, source_op, target_op)) {
    throw std::invalid_argument("homomorphism does not intertwine the operators");
  }

  BauerMorphism p;
  p.target_vertex_count = source.dimension;
  p.vertex_images.assign(static_cast<std::size_t>(target.dimension), -1);
  for (int j = 0; j < target.dimension; ++j) {
    // Vertex state j of the target simplex composed with the hom, read off on
    // the source indicator functions.
    std::vector<Rat> weights;
    weights.reserve(static_cast<std::size_t>(source.dimension));
    for (int i = 0; i < source.dimension; ++i) {
      weights.push_back(
          apply_cube_hom(h, source, target, indicator(source.dimension, i))[static_cast<std::size_t>(j)]);
    }
    const int vertex = match_vertex(weights);
    if (vertex < 0) {
      throw std::logic_error("composed vertex state is not a vertex state");
    }
    p.vertex_images[static_cast<std::size_t>(j)] = vertex;
  }

  // Conclusion of the transport: the result intertwines the induced self-maps.
  for (int j = 0; j < target.dimension; ++j) {
    const int lhs = source_op.sigma[static_cast<std::size_t>(p.vertex_images[static_cast<std::size_t>(j)])];
    const int rhs = p.vertex_images[static_cast<std::size_t>(target_op.sigma[static_cast<std::size_t>(j)])];
    if (lhs != rhs) {
      throw std::logic_error("transported morphism does not intertwine the self-maps");
    }
  }
  return p;
}

AlgebraHom hom_of_simplex_morphism(const BauerMorphism& p, const BauerObject& source,
                                   const BauerObject& target) {
  if (!is_bauer_morphism(p, source, target)) {
    throw std::invalid_argument("not a morphism of simplex pairs (shape or intertwining)");
  }
  AlgebraHom hom{p.vertex_images};
  // Conclusion: the hom intertwines the pullback operators.
  if (!commutes_with_operators(hom, OperatorSpec{target.g}, OperatorSpec{source.g})) {
    throw std::logic_error("transported hom does not intertwine the pullback operators");
  }
  return hom;
}

BauerMorphism evaluation_map(const BauerObject& obj) {
  obj.validate();
  InducedFunctionAlgebra funcalg = to_function_algebra(obj);
  BauerMorphism p;
  p.target_vertex_count = obj.vertices;
  p.vertex_images.assign(static_cast<std::size_t>(obj.vertices), -1);
  for (int x = 0; x < obj.vertices; ++x) {
    // The state evaluating functions at vertex x, read off on indicators.
    std::vector<Rat> weights;
    weights.reserve(static_cast<std::size_t>(obj.vertices));
    for (int i = 0; i < obj.vertices; ++i) {
      weights.push_back(indicator(funcalg.algebra.dimension, i)[static_cast<std::size_t>(x)]);
    }
    const int vertex = match_vertex(weights);
    if (vertex < 0) {
      throw std::logic_error("evaluation state is not a vertex state");
    }
    p.vertex_images[static_cast<std::size_t>(x)] = vertex;
  }
  return p;
}

BauerCertificate verify_bauer_duality(const BauerObject& obj, int samples, std::uint64_t seed) {
  obj.validate();
  BauerCertificate cert;
  cert.pass = true;
  cert.side = "simplex";
  cert.input_vertices = obj.vertices;
  cert.input_g = obj.g;
  cert.object_class = kObjectClass;

  InducedFunctionAlgebra funcalg = to_function_algebra(obj);
  BauerObject dual = to_state_simplex(funcalg.algebra, funcalg.tau);
  BauerMorphism witness = evaluation_map(obj);
  cert.dual_dim = funcalg.algebra.dimension;
  cert.dual_sigma = funcalg.tau.sigma;
  cert.double_map = dual.g;
  cert.witness = witness.vertex_images;

  record(cert, "function algebra dimension matches the vertex count",
         funcalg.algebra.dimension == obj.vertices);
  record(cert, "pullback operator map equals the self-map", funcalg.tau.sigma == obj.g);
  record(cert, "round-trip simplex has the input vertex count", dual.vertices == obj.vertices);
  {
    std::vector<int> seen = witness.vertex_images;
    std::sort(seen.begin(), seen.end());
    bool ok = static_cast<int>(seen.size()) == dual.vertices &&
              std::adjacent_find(seen.begin(), seen.end()) == seen.end() && seen.front() >= 0 &&
              seen.back() < dual.vertices;
    record(cert, "evaluation map is a vertex bijection", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < obj.vertices; ++x) {
      const int lhs = witness.vertex_images[static_cast<std::size_t>(obj.g[static_cast<std::size_t>(x)])];
      const int rhs = dual.g[static_cast<std::size_t>(witness.vertex_images[static_cast<std::size_t>(x)])];
      if (lhs != rhs) {
        ok = false;
        detail = "vertex " + std::to_string(x);
        break;
      }
    }
    record(cert, "evaluation map intertwines the self-maps on vertices", ok, detail);
  }
  record(cert, "round-trip self-map equals the input self-map", dual.g == obj.g);

  std::mt19937_64 rng(seed);
  std::vector<RationalState> points;
  for (int x = 0; x < obj.vertices; ++x) {
    points.push_back(vertex_state(obj.vertices, x));
  }
  for (int i = 0; i < samples; ++i) {
    points.push_back(random_interior_state(rng, obj.vertices));
  }
  for (const RationalState& s : points) {
    cert.sample_points.push_back(format_row(s.weights));
  }

  AffineSelfMap self_map{obj.g};
  AffineSelfMap dual_self_map{dual.g};
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < points.size() && ok; ++i) {
      RationalState pushed = witness.apply(points[i]);
      // Point evaluation: the pushed state applied to a function must equal
      // the function's affine value at the point; swept over indicators and a
      // few random functions.
      std::vector<CubeElement> functions;
      for (int v = 0; v < obj.vertices; ++v) {
        functions.push_back(indicator(obj.vertices, v));
      }
      functions.push_back(random_cube_element(rng, obj.vertices));
      functions.push_back(random_cube_element(rng, obj.vertices));
      for (const CubeElement& f : functions) {
        Rat via_state{0};
        Rat via_point{0};
        for (int v = 0; v < obj.vertices; ++v) {
          via_state += pushed.weights[static_cast<std::size_t>(v)] * f[static_cast<std::size_t>(v)];
          via_point += points[i].weights[static_cast<std::size_t>(v)] * f[static_cast<std::size_t>(v)];
        }
        if (via_state != via_point) {
          ok = false;
          detail = "sample " + std::to_string(i);
          break;
        }
      }
    }
    record(cert, "evaluation map acts by point evaluation at samples", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (witness.apply(self_map.apply(points[i])) !=
          dual_self_map.apply(witness.apply(points[i]))) {
        ok = false;
        detail = "sample " + std::to_string(i);
        break;
      }
    }
    record(cert, "self-maps intertwine with the evaluation map at samples", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      Rat ratio = random_mix_ratio(rng);
      RationalState mixed = mix_states(ratio, points[i], points[i + 1]);
      RationalState lhs = self_map.apply(mixed);
      RationalState rhs = mix_states(ratio, self_map.apply(points[i]), self_map.apply(points[i + 1]));
      if (lhs != rhs) {
        ok = false;
        detail = "samples " + std::to_string(i) + ", " + std::to_string(i + 1);
        break;
      }
    }
    record(cert, "self-map extension is affine at sampled pairs", ok, detail);
  }
  return cert;
}

BauerCertificate verify_bauer_duality(const RationalCubeAlgebra& cube, const OperatorSpec& tau,
                                      int samples, std::uint64_t seed) {
  require_cube_spec(tau, cube.dimension);
  BauerCertificate cert;
  cert.pass = true;
  cert.side = "algebra";
  cert.input_dim = cube.dimension;
  cert.input_sigma = tau.sigma;
  cert.object_class = kObjectClass;

  BauerObject dual = to_state_simplex(cube, tau);
  InducedFunctionAlgebra round_trip = to_function_algebra(dual);
  cert.dual_vertices = dual.vertices;
  cert.dual_g = dual.g;
  cert.double_map = round_trip.tau.sigma;
  // The vertex-value identification: coordinate j of the round-trip cube is
  // the value at vertex state j, i.e. coordinate j of the input cube.
  cert.witness.resize(static_cast<std::size_t>(cube.dimension));
  for (int j = 0; j < cube.dimension; ++j) {
    cert.witness[static_cast<std::size_t>(j)] = j;
  }

  record(cert, "state simplex has one vertex per coordinate", dual.vertices == cube.dimension);
  record(cert, "induced vertex map equals the operator map", dual.g == tau.sigma);
  record(cert, "round-trip cube has the input dimension",
         round_trip.algebra.dimension == cube.dimension);
  record(cert, "round-trip operator map equals the input operator",
         round_trip.tau.sigma == tau.sigma);

  std::mt19937_64 rng(seed);
  std::vector<CubeElement> elements;
  elements.push_back(cube.zero());
  elements.push_back(cube.one());
  for (int j = 0; j < cube.dimension; ++j) {
    elements.push_back(indicator(cube.dimension, j));
  }
  for (int i = 0; i < samples; ++i) {
    elements.push_back(random_cube_element(rng, cube.dimension));
  }
  for (const CubeElement& f : elements) {
    cert.sample_points.push_back(format_row(f));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (apply_cube_operator(tau, cube, elements[i]) !=
          apply_cube_operator(round_trip.tau, round_trip.algebra, elements[i])) {
        ok = false;
        detail = "sample " + std::to_string(i);
        break;
      }
    }
    record(cert, "input and round-trip operators agree on samples", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      CubeElement once = apply_cube_operator(tau, cube, elements[i]);
      if (apply_cube_operator(tau, cube, once) != once) {
        ok = false;
        detail = "sample " + std::to_string(i);
        break;
      }
    }
    record(cert, "operator is idempotent at samples", ok, detail);
  }
  record(cert, "operator fixes 0",
         apply_cube_operator(tau, cube, cube.zero()) == cube.zero());
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (apply_cube_operator(tau, cube, cube.star(elements[i])) !=
          cube.star(apply_cube_operator(tau, cube, elements[i]))) {
        ok = false;
        detail = "sample " + std::to_string(i);
        break;
      }
    }
    record(cert, "operator preserves star at samples", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
      CubeElement lhs = apply_cube_operator(tau, cube, cube.oplus(elements[i], elements[i + 1]));
      CubeElement rhs = cube.oplus(apply_cube_operator(tau, cube, elements[i]),
                                   apply_cube_operator(tau, cube, elements[i + 1]));
      if (lhs != rhs) {
        ok = false;
        detail = "samples " + std::to_string(i) + ", " + std::to_string(i + 1);
        break;
      }
    }
    record(cert, "operator preserves oplus at sampled pairs", ok, detail);
  }
  return cert;
}

namespace {

bool valid_map(const std::vector<int>& g, int count) {
  if (static_cast<int>(g.size()) != count) {
    return false;
  }
  for (int image : g) {
    if (image < 0 || image >= count) {
      return false;
    }
  }
  return true;
}

bool idempotent_vector(const std::vector<int>& g, int count) {
  if (!valid_map(g, count)) {
    return false;
  }
  for (int x = 0; x < count; ++x) {
    const int gx = g[static_cast<std::size_t>(x)];
    if (g[static_cast<std::size_t>(gx)] != gx) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<Rat>> parse_row(const std::vector<std::string>& row) {
  std::vector<Rat> out;
  out.reserve(row.size());
  for (const std::string& cell : row) {
    try {
      out.push_back(parse_rational(cell));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<Rat> pushforward(const std::vector<int>& map, const std::vector<Rat>& weights) {
  std::vector<Rat> out(weights.size(), Rat{0});
  for (std::size_t j = 0; j < weights.size(); ++j) {
    out[static_cast<std::size_t>(map[j])] += weights[j];
  }
  return out;
}

std::vector<Rat> pullback(const std::vector<int>& map, const std::vector<Rat>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (int image : map) {
    out.push_back(values[static_cast<std::size_t>(image)]);
  }
  return out;
}

} // namespace

std::vector<std::string> replay_bauer_certificate(const BauerCertificate& cert) {
  std::vector<std::string> failures;
  auto fail = [&failures](const std::string& what) { failures.push_back(what); };

  if (cert.side == "algebra") {
    const int dim = cert.input_dim;
    if (dim < 1) {
      fail("cube dimension out of range");
      return failures;
    }
    if (!idempotent_vector(cert.input_sigma, dim)) {
      fail("input operator map is not an idempotent self-map");
    }
    if (cert.dual_vertices != dim) {
      fail("dual simplex vertex count does not match the cube dimension");
    }
    if (cert.dual_g != cert.input_sigma) {
      fail("dual self-map differs from the input operator map");
    }
    if (cert.double_map != cert.input_sigma) {
      fail("round-trip operator differs from the input operator");
    }
    std::vector<int> identity(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      identity[static_cast<std::size_t>(j)] = j;
    }
    if (cert.witness != identity) {
      fail("vertex-value identification witness is not the coordinate identity");
    }
    const bool maps_ok = valid_map(cert.input_sigma, dim) && valid_map(cert.double_map, dim);
    for (std::size_t i = 0; i < cert.sample_points.size(); ++i) {
      std::optional<std::vector<Rat>> f = parse_row(cert.sample_points[i]);
      if (!f || static_cast<int>(f->size()) != dim) {
        fail("sample " + std::to_string(i) + " is not a rational vector of the cube dimension");
        continue;
      }
      for (const Rat& v : *f) {
        if (v < Rat{0} || v > Rat{1}) {
          fail("sample " + std::to_string(i) + " leaves the unit cube");
          break;
        }
      }
      if (!maps_ok) {
        continue;
      }
      std::vector<Rat> via_input = pullback(cert.input_sigma, *f);
      std::vector<Rat> via_round_trip = pullback(cert.double_map, *f);
      if (via_input != via_round_trip) {
        fail("operators disagree on sample " + std::to_string(i));
      }
      if (pullback(cert.input_sigma, via_input) != via_input) {
        fail("operator is not idempotent on sample " + std::to_string(i));
      }
    }
  } else if (cert.side == "simplex") {
    const int n = cert.input_vertices;
    if (n < 1) {
      fail("vertex count out of range");
      return failures;
    }
    if (!idempotent_vector(cert.input_g, n)) {
      fail("input self-map is not an idempotent self-map");
    }
    if (cert.dual_dim != n) {
      fail("function algebra dimension does not match the vertex count");
    }
    if (cert.dual_sigma != cert.input_g) {
      fail("pullback operator map differs from the input self-map");
    }
    if (cert.double_map != cert.input_g) {
      fail("round-trip self-map differs from the input self-map");
    }
    std::vector<int> witness_sorted = cert.witness;
    std::sort(witness_sorted.begin(), witness_sorted.end());
    bool witness_ok = static_cast<int>(cert.witness.size()) == n;
    for (int j = 0; witness_ok && j < n; ++j) {
      witness_ok = witness_sorted[static_cast<std::size_t>(j)] == j;
    }
    if (!witness_ok) {
      fail("evaluation witness is not a vertex bijection");
    }
    if (!witness_ok || !valid_map(cert.input_g, n) || !valid_map(cert.double_map, n)) {
      return failures;
    }
    for (int x = 0; x < n; ++x) {
      const int lhs = cert.witness[static_cast<std::size_t>(cert.input_g[static_cast<std::size_t>(x)])];
      const int rhs = cert.double_map[static_cast<std::size_t>(cert.witness[static_cast<std::size_t>(x)])];
      if (lhs != rhs) {
        fail("witness does not intertwine the self-maps at vertex " + std::to_string(x));
        break;
      }
    }
    for (std::size_t i = 0; i < cert.sample_points.size(); ++i) {
      std::optional<std::vector<Rat>> w = parse_row(cert.sample_points[i]);
      if (!w || static_cast<int>(w->size()) != n) {
        fail("sample " + std::to_string(i) + " is not a rational vector over the vertices");
        continue;
      }
      Rat total{0};
      bool nonneg = true;
      for (const Rat& v : *w) {
        nonneg = nonneg && v >= Rat{0};
        total += v;
      }
      if (!nonneg || total != Rat{1}) {
        fail("sample " + std::to_string(i) + " is not a barycentric weight vector");
        continue;
      }
      std::vector<Rat> pushed_then_mapped = pushforward(cert.witness, pushforward(cert.input_g, *w));
      std::vector<Rat> mapped_then_pushed = pushforward(cert.double_map, pushforward(cert.witness, *w));
      if (pushed_then_mapped != mapped_then_pushed) {
        fail("self-maps fail to intertwine through the witness on sample " + std::to_string(i));
      }
      if (pushforward(cert.witness, *w) != *w) {
        fail("evaluation witness moves sample " + std::to_string(i));
      }
    }
  } else {
    fail("unknown certificate side: " + cert.side);
  }
  if (cert.object_class != kObjectClass) {
    fail("object class label is not \"" + std::string{kObjectClass} + "\"");
  }
  return failures;
}

} // namespace statone
