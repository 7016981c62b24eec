#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "statone/chain.hpp"
#include "statone/ideal.hpp"
#include "statone/rational.hpp"
#include "statone/table_algebra.hpp"

using namespace statone;

namespace {

ProductAlgebra make(std::vector<int> orders) {
  return ProductAlgebra{ChainSignature{std::move(orders)}};
}

}  // namespace

TEST_CASE("rational parse and print round trip") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("0") == Rat(0));
  CHECK(parse_rational("1") == Rat(1));
  CHECK(parse_rational("6/8") == Rat(3, 4));
  CHECK(format_rational(Rat(3, 4)) == "3/4");
  CHECK(format_rational(Rat(0)) == "0/1");
  CHECK(format_rational(Rat(1)) == "1/1");
  CHECK(parse_rational(format_rational(Rat(17, 48))) == Rat(17, 48));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("truncated addition on chains") {
  // On the 3-element chain, 1/2 + 1/2 saturates at 1.
  ProductAlgebra s2 = make({2});
  CHECK(s2.oplus({1}, {1}) == MvElement{2});

  // Zero is neutral, swept over a nontrivial product.
  ProductAlgebra a = make({2, 3});
  for (const MvElement& x : a.elements()) {
    CHECK(a.oplus(x, a.zero()) == x);
  }

  // Coordinatewise formula: (1/2, 2/3) + (0, 2/3) = (1/2, 1).
  CHECK(a.oplus({1, 2}, {0, 2}) == MvElement({1, 3}));
}

TEST_CASE("complement") {
  ProductAlgebra s4 = make({4});
  CHECK(s4.star(s4.zero()) == s4.one());
  CHECK(s4.star({1}) == MvElement{3});

  // Involution over all 60 elements of the [2,4,3] product.
  ProductAlgebra a = make({2, 4, 3});
  for (const MvElement& x : a.elements()) {
    CHECK(a.star(a.star(x)) == x);
  }
}

TEST_CASE("derived operations") {
  ProductAlgebra s2 = make({2});
  CHECK(s2.odot({1}, {1}) == MvElement{0});

  ProductAlgebra s3 = make({3});
  CHECK(s3.join({2}, {1}) == MvElement{2});
  CHECK(s3.meet({2}, {1}) == MvElement{1});

  ProductAlgebra a = make({2, 4, 3});
  for (const MvElement& x : a.elements()) {
    CHECK(a.odot(x, a.one()) == x);
  }
}

TEST_CASE("library operations agree with the oracle formulas") {
  const std::vector<int> orders{2, 3};
  ProductAlgebra a = make(orders);
  const std::vector<oracle::Vec> elems = oracle::all_elements(orders);
  for (const oracle::Vec& x : elems) {
    CHECK(a.star(x) == oracle::vec_star(x, orders));
    for (const oracle::Vec& y : elems) {
      CHECK(a.oplus(x, y) == oracle::vec_oplus(x, y, orders));
      CHECK(a.odot(x, y) == oracle::vec_odot(x, y, orders));
      CHECK(a.leq(x, y) == oracle::vec_leq(x, y));
    }
  }
}

TEST_CASE("partial addition and n-fold sums") {
  ProductAlgebra s4 = make({4});
  CHECK(s4.nmul(2, {1}) == MvElement{2});

  ProductAlgebra s2 = make({2});
  // No triple of equal summands reaches 1 in the 3-element chain: the
  // probe exhausts the whole carrier, as does the oracle.
  CHECK_FALSE(s2.weak_divisibility_witness(3).has_value());
  CHECK_FALSE(oracle::weak_divisibility_probe({2}, 3));
  // But halving works: 2 * (1/2) = 1.
  CHECK(s2.weak_divisibility_witness(2) == MvElement{1});

  ProductAlgebra a = make({2, 4, 3});
  for (const MvElement& x : a.elements()) {
    CHECK(a.nmul(0, x) == a.zero());
    CHECK(a.nmul(1, x) == x);
    auto lib = a.nmul(3, x);
    auto ref = oracle::vec_nmul(3, x, {2, 4, 3});
    CHECK(lib == ref);
  }

  // plus is defined exactly on orthogonal pairs.
  for (const MvElement& x : a.elements()) {
    for (const MvElement& y : a.elements()) {
      auto sum = a.plus(x, y);
      const bool orthogonal = a.odot(x, y) == a.zero();
      CHECK(sum.has_value() == orthogonal);
      if (sum) {
        CHECK(*sum == a.oplus(x, y));
      }
    }
  }
}

TEST_CASE("rank and unrank are inverse and rank zero is 0") {
  ProductAlgebra a = make({2, 4, 3});
  CHECK(a.rank(a.zero()) == 0);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    CHECK(a.rank(a.unrank(i)) == i);
  }
}

TEST_CASE("axiom sweeps pass on product tables") {
  for (const std::vector<int>& orders :
       {std::vector<int>{2, 1}, {3}, {1, 1, 1}, {2, 4, 3}, {2, 2, 3}}) {
    ProductAlgebra a = make(orders);
    const MvAxiomReport report = check_mv_axioms(to_table(a));
    CHECK(report.pass);
    for (const LawCheck& law : report.laws) {
      CHECK(law.pass);
    }
  }
}

TEST_CASE("corrupting 1 (+) 1 breaks the saturation law at x = 1") {
  ProductAlgebra s1 = make({1});
  TableAlgebra table = to_table(s1);
  const std::size_t one = static_cast<std::size_t>(table.one());
  table.oplus[one][one] = table.zero;
  const MvAxiomReport report = check_mv_axioms(table);
  CHECK_FALSE(report.pass);
  const LawCheck* law = report.find("x oplus 1 = 1");
  REQUIRE(law != nullptr);
  CHECK_FALSE(law->pass);
  CHECK(law->counterexample.find("x=1") != std::string::npos);
}

TEST_CASE("order coherence") {
  ProductAlgebra a = make({2, 4, 3});
  const auto elems = a.elements();
  for (const MvElement& x : elems) {
    for (const MvElement& y : elems) {
      const bool leq = a.leq(x, y);
      CHECK(leq == (a.join(x, y) == y));
      CHECK(leq == a.leq(a.star(y), a.star(x)));
    }
  }
}

TEST_CASE("maximal ideals and radical: structural report") {
  // One maximal ideal per coordinate; member counts are the complementary
  // factor products (20, 12, 15 for orders [2,4,3]); radical is {0}.
  ProductAlgebra a = make({2, 4, 3});
  const IdealReport report = maximal_ideals_and_radical(a);
  REQUIRE(report.maximal.size() == 3);
  CHECK(report.maximal[0].members(a).size() == 20);
  CHECK(report.maximal[1].members(a).size() == 12);
  CHECK(report.maximal[2].members(a).size() == 15);
  const auto radical_members = report.radical.members(a);
  REQUIRE(radical_members.size() == 1);
  CHECK(radical_members[0] == 0);

  // Two-element algebra: single maximal ideal {0}.
  ProductAlgebra s1 = make({1});
  const IdealReport tiny = maximal_ideals_and_radical(s1);
  REQUIRE(tiny.maximal.size() == 1);
  CHECK(tiny.maximal[0].members(s1) == std::vector<std::uint64_t>{0});
}

TEST_CASE("maximal ideals match brute-force subset enumeration") {
  for (const std::vector<int>& orders :
       {std::vector<int>{1, 1}, {2}, {1, 2}}) {
    ProductAlgebra a = make(orders);
    const IdealReport report = maximal_ideals_and_radical(a);

    // Library answer as sets of coordinate vectors.
    std::set<std::set<oracle::Vec>> lib;
    for (const CoordinateKernel& kernel : report.maximal) {
      std::set<oracle::Vec> members;
      for (std::uint64_t r : kernel.members(a)) {
        members.insert(a.unrank(r));
      }
      lib.insert(std::move(members));
    }

    // Brute force over every subset of the carrier.
    std::set<std::set<oracle::Vec>> brute;
    for (const auto& ideal : oracle::brute_maximal_ideals(orders)) {
      brute.insert(ideal);
    }
    CHECK(lib == brute);

    // Radical = intersection of the maximal ideals = {0} here (semisimple).
    const auto radical_members = report.radical.members(a);
    REQUIRE(radical_members.size() == 1);
    CHECK(radical_members[0] == 0);
  }
}

TEST_CASE("element validation rejects malformed vectors") {
  ProductAlgebra a = make({2, 3});
  CHECK_THROWS_AS(a.require_element({1}), std::invalid_argument);
  CHECK_THROWS_AS(a.require_element({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(a.require_element({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(a.oplus({1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("coordinate values are exact rationals") {
  ProductAlgebra a = make({2, 4, 3});
  const MvElement x{1, 3, 1};
  CHECK(a.value(x, 0) == Rat(1, 2));
  CHECK(a.value(x, 1) == Rat(3, 4));
  CHECK(a.value(x, 2) == Rat(1, 3));
}

TEST_CASE("boolean recognition") {
  CHECK(make({1, 1, 1}).is_boolean());
  CHECK_FALSE(make({2, 1}).is_boolean());
  ProductAlgebra a = make({2, 4, 3});
  CHECK(a.is_boolean_element({0, 4, 3}));
  CHECK_FALSE(a.is_boolean_element({1, 4, 3}));
}
