#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prymscope/residue.hpp"

using namespace prymscope;

namespace {

ResidueVector rv(int n, std::vector<int> e) { return ResidueVector(n, std::move(e)); }

}  // namespace

TEST_CASE("residues are stored reduced") {
  ResidueVector v(4, {5, -1, 8});
  CHECK(v[0] == 1);
  CHECK(v[1] == 3);
  CHECK(v[2] == 0);
  CHECK_THROWS_AS(ResidueVector(1, {0}), validation_error);
}

TEST_CASE("span_closure examples") {
  // empty span is the zero subgroup
  SubgroupData trivial = span_closure({}, 4, 1);
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(rv(4, {0})));

  std::vector<ResidueVector> two{rv(4, {2})};
  SubgroupData half = span_closure(two, 4, 1);
  CHECK(half.order() == 2);
  CHECK(half.contains(rv(4, {2})));
  CHECK(!half.contains(rv(4, {1})));

  std::vector<ResidueVector> f2{rv(2, {1, 0}), rv(2, {1, 1})};
  CHECK(span_closure(f2, 2, 2).order() == 4);
}

TEST_CASE("span_closure input checks") {
  std::vector<ResidueVector> mixed{rv(4, {1}), rv(6, {1})};
  CHECK_THROWS_AS(span_closure(mixed, 4, 1), validation_error);
  std::vector<ResidueVector> lengths{rv(4, {1, 0})};
  CHECK_THROWS_AS(span_closure(lengths, 4, 1), validation_error);
}

TEST_CASE("span_closure matches the pairwise-sum oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    int count = std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<ResidueVector> gens;
    std::vector<std::vector<int>> raw;
    for (int k = 0; k < count; ++k) {
      std::vector<int> e(static_cast<size_t>(m));
      for (auto& x : e) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
      raw.push_back(e);
      gens.emplace_back(n, e);
    }
    SubgroupData sub = span_closure(gens, n, m);
    auto expected = testing::oracle_span(raw, n, m);
    REQUIRE(sub.order() == static_cast<std::int64_t>(expected.size()));
    for (const auto& e : expected) CHECK(sub.contains(rv(n, e)));

    // closure under addition and negation, by exhaustion
    for (const auto& x : sub.elements) {
      CHECK(sub.contains(-x));
      for (const auto& y : sub.elements) CHECK(sub.contains(x + y));
    }
  }
}

TEST_CASE("cyclic_subgroup_contains examples") {
  CHECK(cyclic_subgroup_contains(rv(4, {1}), rv(4, {2})));
  CHECK(!cyclic_subgroup_contains(rv(4, {0, 2}), rv(4, {2, 0})));
  CHECK(cyclic_subgroup_contains(rv(4, {1, 3}), rv(4, {2, 2})));
  CHECK_THROWS_AS(cyclic_subgroup_contains(rv(4, {1}), rv(6, {1})), validation_error);
}

TEST_CASE("cyclic containment agrees with span membership") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> ge(static_cast<size_t>(m)), ce(static_cast<size_t>(m));
    for (auto& x : ge) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    for (auto& x : ce) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    ResidueVector g(n, ge), c(n, ce);
    std::vector<ResidueVector> one{g};
    CHECK(cyclic_subgroup_contains(g, c) == span_closure(one, n, m).contains(c));
  }
}

TEST_CASE("element_order examples and oracle") {
  CHECK(element_order(rv(6, {0, 0})) == 1);
  CHECK(element_order(rv(4, {2})) == 2);
  CHECK(element_order(rv(4, {1, 3})) == 4);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> e(static_cast<size_t>(m));
    for (auto& x : e) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    ResidueVector v(n, e);
    CHECK(element_order(v) == testing::oracle_element_order(e, n));
    // order of v equals the order of the cyclic subgroup it generates
    std::vector<ResidueVector> one{v};
    CHECK(element_order(v) == span_closure(one, n, m).order());
  }
}

TEST_CASE("units") {
  CHECK(units(2) == std::vector<int>{1});
  CHECK(units(4) == std::vector<int>{1, 3});
  CHECK(units(7) == std::vector<int>{1, 2, 3, 4, 5, 6});
}
