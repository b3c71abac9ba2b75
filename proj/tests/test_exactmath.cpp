#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "tsing/exactmath.hpp"

using namespace tsing;

namespace {

// Independent oracle: inverse by exhaustive scan.
long scan_inverse(long a, long n) {
  for (long x = 1; x < n; ++x)
    if ((a % n) * x % n == 1) return x;
  return -1;
}

// Independent oracle: right-to-left evaluation over long rationals.
std::pair<long, long> eval_long(const std::vector<long>& s) {
  long num = s.back(), den = 1;
  for (auto it = std::next(s.rbegin()); it != s.rend(); ++it) {
    long nn = *it * num - den;
    den = num;
    num = nn;
  }
  long g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(7, 1) == 1);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(5, 0) == 5);
  CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gcd(-3, 5), std::invalid_argument);
}

TEST_CASE("mod_inverse matches the exhaustive scan") {
  CHECK(mod_inverse(2, 9) == scan_inverse(2, 9));  // = 5
  CHECK(mod_inverse(2, 9) == 5);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK(mod_inverse(3, 4) == scan_inverse(3, 4));  // = 3
  CHECK(mod_inverse(3, 4) == 3);
  for (long n = 2; n <= 60; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      CHECK(mod_inverse(a, n) == scan_inverse(a, n));
    }
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(mod_inverse(5, 1), std::invalid_argument);
}

TEST_CASE("hj_expand on the known expansions") {
  CHECK(hj_expand(4, 1) == HJString{4});
  CHECK(hj_expand(9, 2) == HJString{5, 2});
  CHECK(hj_expand(7, 5) == HJString{2, 2, 3});
  CHECK(hj_expand(25, 9) == HJString{3, 5, 2});
  CHECK_THROWS_AS(hj_expand(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(hj_expand(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(hj_expand(4, 4), std::invalid_argument);
}

TEST_CASE("hj_evaluate against the independent evaluator") {
  auto check = [](const std::vector<long>& s) {
    HJString hs(s.begin(), s.end());
    auto [n, a] = eval_long(s);
    Fraction f = hj_evaluate(hs);
    CHECK(f.num == n);
    CHECK(f.den == a);
  };
  check({4});
  check({5, 2});
  check({3, 2, 2, 3});  // = 16/7
  check({2, 2, 3});
  CHECK(hj_evaluate({4}) == Fraction(4, 1));
  CHECK(hj_evaluate({5, 2}) == Fraction(9, 2));
  CHECK(hj_evaluate({3, 2, 2, 3}) == Fraction(16, 7));
  CHECK_THROWS_AS(hj_evaluate({}), std::invalid_argument);
  CHECK_THROWS_AS(hj_evaluate({3, 1, 2}), std::invalid_argument);
}

TEST_CASE("conjugate_fraction") {
  CHECK(conjugate_fraction(2, 1) == Fraction(2, 1));  // self-conjugate base
  CHECK(conjugate_fraction(4, 1) == Fraction(4, 3));
  CHECK(conjugate_fraction(9, 2) == Fraction(9, 7));
  CHECK_THROWS_AS(conjugate_fraction(4, 2), std::invalid_argument);
}

TEST_CASE("round trip, reversal duality and conjugation involution") {
  for (long n = 2; n <= 200; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      HJString s = hj_expand(n, a);
      for (const Int& b : s) CHECK(b >= 2);
      Fraction f = hj_evaluate(s);
      CHECK(f.num == n);
      CHECK(f.den == a);
      CHECK(reversed(s) == hj_expand(n, mod_inverse(a, n)));
      Fraction c = conjugate_fraction(n, a);
      Fraction cc = conjugate_fraction(c.num, c.den);
      CHECK(cc.num == n);
      CHECK(cc.den == a);
    }
}

TEST_CASE("conjugate pairs are closed under the extension step") {
  // (n/a, n/(n-a)) -> ((n+a)/a, (n+a)/n): prepend 2 on one side, bump the
  // leading entry on the other.
  for (long n = 2; n <= 200; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      HJString s = hj_expand(n, a);
      HJString t = hj_expand(n, n - a);
      HJString s_up = s;
      s_up.front() += 1;
      HJString t_up;
      t_up.push_back(2);
      t_up.insert(t_up.end(), t.begin(), t.end());
      Fraction fs = hj_evaluate(s_up);
      Fraction ft = hj_evaluate(t_up);
      CHECK(fs.num == n + a);
      CHECK(fs.den == a);
      CHECK(ft.num == n + a);
      CHECK(ft.den == n);
      CHECK(fractions_conjugate(fs, ft));
    }
}

TEST_CASE("fraction construction reduces eagerly") {
  Fraction f(12, 8);
  CHECK(f.num == 3);
  CHECK(f.den == 2);
  CHECK(f.str() == "3/2");
  CHECK_THROWS_AS(Fraction(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fraction(1, 0), std::invalid_argument);
}

TEST_CASE("values far beyond 64 bits") {
  // Entries of Markov solutions grow doubly exponentially; make sure the
  // chain arithmetic is genuinely unbounded.
  Int n("340282366920938463463374607431768211507");  // prime > 2^128
  Int a = 2;
  HJString s = hj_expand(n, a);  // [(n+1)/2, 2]
  REQUIRE(s.size() == 2);
  CHECK(s[0] == (n + 1) / 2);
  Fraction f = hj_evaluate(s);
  CHECK(f.num == n);
  CHECK(f.den == a);
  CHECK(mod_inverse(a, n) * a % n == 1);
  CHECK(reversed(s) == hj_expand(n, mod_inverse(a, n)));
}
