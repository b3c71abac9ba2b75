#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tsing/markov.hpp"

using namespace tsing;

TEST_CASE("the four equation records") {
  const auto& eqs = markov_equations();
  REQUIRE(eqs.size() == 4);
  CHECK(eqs[0].coeffs == std::array<Int, 3>{1, 1, 1});
  CHECK(eqs[0].lambda == 3);
  CHECK(eqs[1].coeffs == std::array<Int, 3>{1, 1, 2});
  CHECK(eqs[1].lambda == 4);
  CHECK(eqs[2].coeffs == std::array<Int, 3>{1, 2, 3});
  CHECK(eqs[2].lambda == 6);
  CHECK(eqs[3].coeffs == std::array<Int, 3>{1, 1, 5});
  CHECK(eqs[3].lambda == 5);
  for (const auto& eq : eqs) {
    for (const Int& c : eq.coeffs) CHECK(eq.lambda % c == 0);
    for (const Triple& t : eq.minimal_solutions) CHECK(is_solution(eq, t));
  }
  CHECK(eqs[3].minimal_solutions ==
        std::vector<Triple>{Triple{1, 2, 1}, Triple{2, 1, 1}});
  CHECK_THROWS_AS(markov_equation(0), std::invalid_argument);
  CHECK_THROWS_AS(markov_equation(5), std::invalid_argument);
}

TEST_CASE("is_solution") {
  CHECK(is_solution(markov_equation(1), {1, 1, 1}));
  CHECK(is_solution(markov_equation(2), {1, 1, 1}));
  CHECK(is_solution(markov_equation(3), {1, 1, 1}));
  CHECK_FALSE(is_solution(markov_equation(1), {1, 1, 3}));
  CHECK_FALSE(is_solution(markov_equation(4), {1, 1, 1}));
  CHECK_THROWS_AS(is_solution(markov_equation(1), {0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("mutation examples") {
  CHECK(mutate(markov_equation(1), {1, 1, 1}, 2) == Triple{1, 1, 2});
  CHECK(mutate(markov_equation(1), {1, 2, 5}, 0) == Triple{29, 2, 5});
  CHECK(mutate(markov_equation(3), {1, 1, 1}, 1) == Triple{1, 2, 1});
  CHECK(is_solution(markov_equation(3), {1, 2, 1}));
  CHECK_THROWS_AS(mutate(markov_equation(1), {1, 1, 1}, 3),
                  std::invalid_argument);
  // Nonpositive results cannot arise from solutions; the guard fires on
  // non-solutions.
  CHECK_THROWS_AS(mutate(markov_equation(1), {9, 1, 1}, 0), std::domain_error);
}

TEST_CASE("mutation is an involution and preserves solutions") {
  for (int fam = 1; fam <= 4; ++fam) {
    const auto& eq = markov_equation(fam);
    for (const Triple& t : enumerate_solutions(eq, 1000))
      for (int pos = 0; pos < 3; ++pos) {
        Triple m = mutate(eq, t, pos);
        CHECK(is_solution(eq, m));
        CHECK(mutate(eq, m, pos) == t);
      }
  }
}

TEST_CASE("enumeration from minimal solutions") {
  auto s1 = enumerate_solutions(markov_equation(1), 2);
  CHECK(s1 == std::set<Triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  auto s5 = enumerate_solutions(markov_equation(1), 5);
  CHECK(s5.count({1, 2, 5}) == 1);
  CHECK(s5.count({2, 1, 5}) == 1);
  auto s4 = enumerate_solutions(markov_equation(4), 2);
  CHECK(s4.count({1, 2, 1}) == 1);
  CHECK(s4.count({2, 1, 1}) == 1);
  CHECK(enumerate_solutions(markov_equation(1), 1) ==
        std::set<Triple>{{1, 1, 1}});
  CHECK_THROWS_AS(enumerate_solutions(markov_equation(4), 1),
                  std::invalid_argument);
}

TEST_CASE("descent reaches a minimal solution") {
  const auto& eq1 = markov_equation(1);
  auto step = descent_step(eq1, {1, 1, 2});
  REQUIRE(step.has_value());
  CHECK(step->first == 2);
  CHECK(step->second == Triple{1, 1, 1});
  CHECK_FALSE(descent_step(eq1, {1, 1, 1}).has_value());
  auto big = descent_step(eq1, {2, 5, 29});
  REQUIRE(big.has_value());
  CHECK(big->first == 2);
  CHECK(big->second == Triple{2, 5, 1});

  for (int fam = 1; fam <= 4; ++fam) {
    const auto& eq = markov_equation(fam);
    for (Triple t : enumerate_solutions(eq, 100000)) {
      int steps = 0;
      for (;;) {
        auto next = descent_step(eq, t);
        if (!next) break;
        t = next->second;
        REQUIRE(++steps < 200);
      }
      CHECK(std::find(eq.minimal_solutions.begin(), eq.minimal_solutions.end(),
                      t) != eq.minimal_solutions.end());
    }
  }
}

TEST_CASE("coordinate symmetries of the solution sets") {
  auto permuted_in = [](const std::set<Triple>& s, const Triple& t, int i,
                        int j) {
    Triple p = t;
    std::swap(p[i], p[j]);
    return s.count(p) == 1;
  };
  // Family 1: closed under all permutations. Families 2, 4: swap(a, b)
  // only. Family 3: no symmetry is expected between distinct coefficients.
  auto s1 = enumerate_solutions(markov_equation(1), 200);
  for (const Triple& t : s1) {
    CHECK(permuted_in(s1, t, 0, 1));
    CHECK(permuted_in(s1, t, 1, 2));
    CHECK(permuted_in(s1, t, 0, 2));
  }
  for (int fam : {2, 4}) {
    auto s = enumerate_solutions(markov_equation(fam), 200);
    for (const Triple& t : s) CHECK(permuted_in(s, t, 0, 1));
  }
  // Spot check that swapping unequal-coefficient coordinates breaks
  // solutions in family 3.
  const auto& eq3 = markov_equation(3);
  CHECK(is_solution(eq3, {1, 2, 1}));
  CHECK_FALSE(is_solution(eq3, {2, 1, 1}));
}

TEST_CASE("solution entries overflow 64-bit integers quickly") {
  const auto& eq = markov_equation(1);
  Triple t{1, 1, 1};
  // Alternate mutation positions to walk out the tree's spine; entries
  // grow doubly exponentially in the step count.
  for (int i = 0; i < 12; ++i) t = mutate(eq, t, i % 3);
  CHECK(is_solution(eq, t));
  Int two63 = Int(1) << 63;
  CHECK(std::max({t[0], t[1], t[2]}) > two63);
}
