#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tsing/intmat.hpp"

using namespace tsing;

namespace {

bool in_column_lattice(const Mat& basis, const std::vector<Int>& x) {
  try {
    solve_integer(basis, x);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

TEST_CASE("unimodular_gcd_rows") {
  std::vector<Int> v{12, 8, 30};
  Mat u = unimodular_gcd_rows(v);
  auto w = mat_vec(u, v);
  CHECK(w == std::vector<Int>{2, 0, 0});  // gcd(12, 8, 30)
  Int d = det(u);
  CHECK((d == 1 || d == -1));
  CHECK(mat_vec(unimodular_gcd_rows({0, 0, 7}), {0, 0, 7}) ==
        std::vector<Int>{7, 0, 0});
  CHECK(mat_vec(unimodular_gcd_rows({-5, 10}), {-5, 10}) ==
        std::vector<Int>{5, 0});
}

TEST_CASE("lattice_column_basis and solve_integer") {
  // 2Z^3 + Z*(1,1,1) has index 4 in Z^3.
  Mat gens{{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}};
  Mat b = lattice_column_basis(gens);
  Int d = det(b);
  mpz_abs(d.get_mpz_t(), d.get_mpz_t());
  CHECK(d == 4);
  CHECK(in_column_lattice(b, {1, 1, 1}));
  CHECK(in_column_lattice(b, {2, 0, 0}));
  CHECK_FALSE(in_column_lattice(b, {1, 0, 0}));
  CHECK_THROWS_AS(lattice_column_basis(Mat{{1, 2}, {2, 4}}),
                  std::invalid_argument);

  std::vector<Int> rhs{3, 7, 9};
  Mat a{{2, 1, 0}, {0, 1, 0}, {1, 0, 3}};
  auto x = solve_integer(a, mat_vec(a, rhs));
  CHECK(x == rhs);
  CHECK_THROWS_AS(solve_integer(a, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("diagonalize: transforms track and the lattice is preserved") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Mat m(2, std::vector<Int>(4));
    for (auto& row : m)
      for (Int& x : row) x = coeff(rng);
    // Keep full row rank by force: append scaled identity columns.
    m[0][2] = 12;
    m[1][2] = 0;
    m[0][3] = 0;
    m[1][3] = 12;
    DiagResult dr = diagonalize(m);
    // u * u_inv = I
    Mat prod = mat_mul(dr.u, dr.u_inv);
    CHECK(prod == identity_mat(2));
    CHECK(dr.s[0][1] == 0);
    CHECK(dr.s[1][0] == 0);
    CHECK(dr.s[0][0] >= 0);
    CHECK(dr.s[1][1] >= 0);
    // The column lattice of m equals the lattice spanned by
    // s_i * col_i(u_inv).
    Mat basis_m = lattice_column_basis(m);
    Mat basis_d{{dr.s[0][0] * dr.u_inv[0][0], dr.s[1][1] * dr.u_inv[0][1]},
                {dr.s[0][0] * dr.u_inv[1][0], dr.s[1][1] * dr.u_inv[1][1]}};
    for (int j = 0; j < 2; ++j)
      CHECK(in_column_lattice(basis_m,
                              {basis_d[0][j], basis_d[1][j]}));
    for (int j = 0; j < 4; ++j)
      CHECK(in_column_lattice(basis_d, {m[0][j], m[1][j]}));
  }
}

TEST_CASE("det and adjugate agree") {
  Mat a{{3, 1, 2}, {0, 4, 1}, {5, 0, 2}};
  Mat adj = adjugate(a);
  Mat prod = mat_mul(a, adj);
  Int d = det(a);
  Mat want = identity_mat(3);
  for (auto& row : want)
    for (Int& x : row) x *= d;
  CHECK(prod == want);
}
