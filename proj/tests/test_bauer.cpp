#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "statone/bauer.hpp"
#include "statone/chain.hpp"
#include "statone/enumerate.hpp"
#include "statone/operator_spec.hpp"

using namespace statone;

namespace {

RationalState vertex_state(int k, int j) {
  RationalState s{std::vector<Rat>(static_cast<std::size_t>(k), Rat(0))};
  s.weights[static_cast<std::size_t>(j)] = Rat(1);
  return s;
}

// Deterministic rational cube points for sampling-based checks.
CubeElement random_point(std::mt19937_64& rng, int dim) {
  CubeElement x;
  for (int j = 0; j < dim; ++j) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 9);
    const std::int64_t num = static_cast<std::int64_t>(rng() % (den + 1));
    x.emplace_back(num, den);
  }
  return x;
}

}  // namespace

TEST_CASE("rational cube operations") {
  const RationalCubeAlgebra cube{3};
  const CubeElement x{Rat(1, 2), Rat(3, 4), Rat(1, 3)};
  const CubeElement y{Rat(2, 3), Rat(1, 4), Rat(0)};

  CHECK(cube.oplus(x, y) == CubeElement({Rat(1), Rat(1), Rat(1, 3)}));
  CHECK(cube.star(x) == CubeElement({Rat(1, 2), Rat(1, 4), Rat(2, 3)}));
  CHECK(cube.odot(x, y) == CubeElement({Rat(1, 6), Rat(0), Rat(0)}));
  CHECK(cube.zero() == CubeElement(3, Rat(0)));
  CHECK(cube.one() == CubeElement(3, Rat(1)));

  // Partial addition defined exactly on orthogonal pairs.
  CHECK_FALSE(cube.plus(x, y).has_value());
  const CubeElement small{Rat(1, 4), Rat(1, 8), Rat(1, 3)};
  auto sum = cube.plus(small, small);
  REQUIRE(sum.has_value());
  CHECK(*sum == CubeElement({Rat(1, 2), Rat(1, 4), Rat(2, 3)}));

  CHECK_THROWS_AS(cube.require_element(CubeElement{Rat(1), Rat(2), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("the cube is weakly divisible, finite chains are not") {
  const RationalCubeAlgebra cube{3};
  for (int n = 1; n <= 10; ++n) {
    auto v = cube.weak_divisibility_witness(n);
    REQUIRE(v.has_value());
    auto total = cube.nmul(n, *v);
    REQUIRE(total.has_value());
    CHECK(*total == cube.one());
  }
  // Contrast: the 3-element chain has no v with 3*v = 1 (oracle sweep).
  CHECK_FALSE(oracle::weak_divisibility_probe({2}, 3));
}

TEST_CASE("pullback operator on the function algebra") {
  // Simplex with the funnel self-map: functions pull back by copying
  // coordinates, tau(f) = (f0, f0, f2).
  const BauerObject obj{3, {0, 0, 2}, {}};
  const InducedFunctionAlgebra induced = to_function_algebra(obj);
  CHECK(induced.algebra.dimension == 3);
  CHECK(induced.tau.sigma == obj.g);

  const CubeElement f{Rat(1, 2), Rat(3, 4), Rat(1, 3)};
  CHECK(apply_cube_operator(induced.tau, induced.algebra, f) ==
        CubeElement({Rat(1, 2), Rat(1, 2), Rat(1, 3)}));

  // Identity self-map pulls back to the identity operator.
  const BauerObject id_obj{3, {0, 1, 2}, {}};
  CHECK(to_function_algebra(id_obj).tau.sigma == std::vector<int>({0, 1, 2}));

  // The pullback preserves the operations on random rational triples.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CubeElement a = random_point(rng, 3);
    const CubeElement b = random_point(rng, 3);
    const auto op = [&](const CubeElement& z) {
      return apply_cube_operator(induced.tau, induced.algebra, z);
    };
    CHECK(op(induced.algebra.oplus(a, b)) ==
          induced.algebra.oplus(op(a), op(b)));
    CHECK(op(induced.algebra.star(a)) == induced.algebra.star(op(a)));
    CHECK(op(induced.algebra.zero()) == induced.algebra.zero());
  }
}

TEST_CASE("state simplex of a cube algebra") {
  const RationalCubeAlgebra cube{3};
  const OperatorSpec funnel{{0, 0, 2}};
  const BauerObject simplex = to_state_simplex(cube, funnel);
  CHECK(simplex.vertices == 3);
  CHECK(simplex.g == funnel.sigma);

  const BauerObject id_simplex =
      to_state_simplex(cube, OperatorSpec{{0, 1, 2}});
  CHECK(id_simplex.g == std::vector<int>({0, 1, 2}));

  // The induced self-map is affine on rational mixtures.
  const BauerMorphism g{simplex.g, simplex.vertices};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    RationalState s1{{Rat(1, 2), Rat(1, 4), Rat(1, 4)}};
    RationalState s2{{Rat(1, 6), Rat(1, 3), Rat(1, 2)}};
    const Rat lambda(1 + static_cast<std::int64_t>(rng() % 5), 7);
    RationalState mix{std::vector<Rat>(3)};
    for (std::size_t j = 0; j < 3; ++j) {
      mix.weights[j] =
          lambda * s1.weights[j] + (Rat(1) - lambda) * s2.weights[j];
    }
    RationalState expected{std::vector<Rat>(3)};
    for (std::size_t j = 0; j < 3; ++j) {
      expected.weights[j] = lambda * g.apply(s1).weights[j] +
                            (Rat(1) - lambda) * g.apply(s2).weights[j];
    }
    CHECK(g.apply(mix).weights == expected.weights);
  }
}

TEST_CASE("evaluation map acts by point evaluation") {
  const BauerObject obj{3, {0, 0, 2}, {}};
  const BauerMorphism p = evaluation_map(obj);

  // Vertices go to the coordinate-evaluation states.
  for (int j = 0; j < 3; ++j) {
    CHECK(p.apply(vertex_state(3, j)).weights == vertex_state(3, j).weights);
  }

  // The barycenter evaluates functions by averaging: p(x)(f) = sum f_j / 3,
  // which in barycentric coordinates is the same weight vector.
  const RationalState barycenter{{Rat(1, 3), Rat(1, 3), Rat(1, 3)}};
  const RationalState image = p.apply(barycenter);
  const CubeElement f{Rat(1, 2), Rat(3, 4), Rat(1, 3)};
  Rat value(0);
  for (std::size_t j = 0; j < 3; ++j) {
    value += image.weights[j] * f[j];
  }
  CHECK(value == (Rat(1, 2) + Rat(3, 4) + Rat(1, 3)) / 3);

  // Both composites push the barycenter to the same state (2/3, 0, 1/3).
  const BauerMorphism g{obj.g, obj.vertices};
  const BauerObject double_dual = to_state_simplex(to_function_algebra(obj).algebra,
                                                   to_function_algebra(obj).tau);
  const BauerMorphism g_double{double_dual.g, double_dual.vertices};
  const RationalState via_g = p.apply(g.apply(barycenter));
  const RationalState via_dual = g_double.apply(p.apply(barycenter));
  CHECK(via_g.weights == std::vector<Rat>({Rat(2, 3), Rat(0), Rat(1, 3)}));
  CHECK(via_g.weights == via_dual.weights);
}

TEST_CASE("morphism transport between cubes and simplices") {
  // Projection hom from the 3-cube (funnel operator) onto the 2-cube
  // (identity operator), keeping coordinates 0 and 2.
  const RationalCubeAlgebra source{3};
  const RationalCubeAlgebra target{2};
  const OperatorSpec source_op{{0, 0, 2}};
  const OperatorSpec target_op{{0, 1}};
  const AlgebraHom h{{0, 2}};

  const BauerMorphism p =
      simplex_morphism_of_hom(h, source, source_op, target, target_op);
  // The simplex of the target embeds on matching vertices: 0 -> 0, 1 -> 2.
  CHECK(p.vertex_images == std::vector<int>({0, 2}));
  CHECK(p.target_vertex_count == 3);

  const BauerObject source_simplex = to_state_simplex(source, source_op);
  const BauerObject target_simplex = to_state_simplex(target, target_op);
  CHECK(is_bauer_morphism(p, target_simplex, source_simplex));

  // Transport back recovers the hom.
  const AlgebraHom back =
      hom_of_simplex_morphism(p, target_simplex, source_simplex);
  CHECK(back == h);

  // A hom that fails the intertwining precondition is rejected.
  CHECK_THROWS_AS(simplex_morphism_of_hom(AlgebraHom{{1, 0}}, source,
                                          source_op, target, target_op),
                  std::invalid_argument);

  // Functoriality on a composable pair: collapse the 2-cube onto coordinate
  // 0, then the composite against composing the simplex maps in reverse.
  const RationalCubeAlgebra third{1};
  const OperatorSpec third_op{{0}};
  const AlgebraHom h2{{0}};
  const BauerMorphism p2 =
      simplex_morphism_of_hom(h2, target, target_op, third, third_op);
  const AlgebraHom composed = compose_homs(h2, h);
  const BauerMorphism composed_p =
      simplex_morphism_of_hom(composed, source, source_op, third, third_op);
  CHECK(composed_p == compose_bauer_morphisms(p, p2));

  // Identity hom transports to the identity morphism.
  const AlgebraHom id_hom{{0, 1, 2}};
  const BauerMorphism id_p =
      simplex_morphism_of_hom(id_hom, source, source_op, source, source_op);
  CHECK(id_p == identity_bauer_morphism(source_simplex));
}

TEST_CASE("bauer duality certificates") {
  // Simplex side for the funnel object.
  const BauerObject obj{3, {0, 0, 2}, {}};
  const BauerCertificate simplex_cert = verify_bauer_duality(obj);
  CHECK(simplex_cert.pass);
  CHECK(simplex_cert.side == "simplex");
  CHECK(simplex_cert.dual_dim == 3);
  CHECK(simplex_cert.double_map == obj.g);
  for (const IdentityCheck& check : simplex_cert.checks) {
    CHECK(check.pass);
  }

  // Algebra side for the cube with the same operator.
  const RationalCubeAlgebra cube{3};
  const BauerCertificate cube_cert =
      verify_bauer_duality(cube, OperatorSpec{{0, 0, 2}});
  CHECK(cube_cert.pass);
  CHECK(cube_cert.side == "algebra");
  CHECK(cube_cert.double_map == std::vector<int>({0, 0, 2}));

  // Degenerate single-vertex object round trips trivially.
  CHECK(verify_bauer_duality(BauerObject{1, {0}, {}}).pass);

  // Exhaustive sweep over small dimensions with reduced sampling.
  for (int k = 1; k <= 3; ++k) {
    for (const auto& sigma : idempotent_self_maps(k)) {
      CHECK(verify_bauer_duality(BauerObject{k, sigma, {}}, 10).pass);
      CHECK(verify_bauer_duality(RationalCubeAlgebra{k}, OperatorSpec{sigma}, 10)
                .pass);
    }
  }
}

TEST_CASE("idempotent self-map counts match brute force") {
  const std::size_t expected[] = {1, 3, 10, 41, 196};
  for (int k = 1; k <= 5; ++k) {
    const auto maps = idempotent_self_maps(k);
    CHECK(maps.size() == expected[k - 1]);
    CHECK(maps.size() == oracle::idempotent_maps(k).size());
  }
}

TEST_CASE("bauer certificate replay and corruption detection") {
  const BauerObject obj{3, {0, 0, 2}, {}};
  const BauerCertificate cert = verify_bauer_duality(obj, 20);
  CHECK(replay_bauer_certificate(cert).empty());

  // Tampered dual operator map.
  BauerCertificate bad_sigma = cert;
  bad_sigma.dual_sigma[1] = 1;
  CHECK_FALSE(replay_bauer_certificate(bad_sigma).empty());

  // Tampered double-dual self-map.
  BauerCertificate bad_round = cert;
  bad_round.double_map[0] = 2;
  CHECK_FALSE(replay_bauer_certificate(bad_round).empty());

  // Tampered witness permutation.
  BauerCertificate bad_witness = cert;
  std::swap(bad_witness.witness[0], bad_witness.witness[2]);
  CHECK_FALSE(replay_bauer_certificate(bad_witness).empty());

  // Tampered sample row: corrupt one stored rational.
  BauerCertificate bad_sample = cert;
  REQUIRE_FALSE(bad_sample.sample_points.empty());
  bad_sample.sample_points[0][0] = "9/5";
  CHECK_FALSE(replay_bauer_certificate(bad_sample).empty());

  // Out-of-range map entries are reported as failures, not crashes.
  BauerCertificate broken = cert;
  broken.input_g = {9, 9, 9};
  CHECK_FALSE(replay_bauer_certificate(broken).empty());

  // Algebra side replays too.
  const BauerCertificate cube_cert =
      verify_bauer_duality(RationalCubeAlgebra{3}, OperatorSpec{{0, 0, 2}}, 20);
  CHECK(replay_bauer_certificate(cube_cert).empty());
  BauerCertificate bad_cube = cube_cert;
  bad_cube.input_sigma[2] = 0;
  CHECK_FALSE(replay_bauer_certificate(bad_cube).empty());
}

TEST_CASE("objects validate their self-maps") {
  CHECK_THROWS_AS((BauerObject{2, {1, 0}, {}}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((BauerObject{2, {0}, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(require_cube_spec(OperatorSpec{{1, 0}}, 2),
                  std::invalid_argument);
}
