#include "tsing/intmat.hpp"

#include <stdexcept>

namespace tsing {

namespace {

size_t rows(const Mat& a) { return a.size(); }
size_t cols(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

void check_rect(const Mat& a) {
  for (const auto& r : a)
    if (r.size() != cols(a)) throw std::invalid_argument("ragged matrix");
}

}  // namespace

Mat identity_mat(int n) {
  Mat a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (cols(a) != rows(b)) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c(rows(a), std::vector<Int>(cols(b), 0));
  for (size_t i = 0; i < rows(a); ++i)
    for (size_t k = 0; k < cols(a); ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < cols(b); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<Int> mat_vec(const Mat& a, const std::vector<Int>& v) {
  if (cols(a) != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<Int> out(rows(a), 0);
  for (size_t i = 0; i < rows(a); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

Int det(const Mat& a) {
  if (rows(a) != cols(a)) throw std::invalid_argument("det: not square");
  switch (rows(a)) {
    case 1:
      return a[0][0];
    case 2:
      return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    case 3:
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    default:
      throw std::invalid_argument("det: size > 3 unsupported");
  }
}

Mat adjugate(const Mat& a) {
  if (rows(a) != cols(a)) throw std::invalid_argument("adjugate: not square");
  size_t n = rows(a);
  if (n == 1) return {{Int(1)}};
  if (n == 2) return {{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}};
  if (n == 3) {
    Mat adj(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        // cofactor expansion via cyclic indices keeps the sign built in
        adj[j][i] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
      }
    return adj;
  }
  throw std::invalid_argument("adjugate: size > 3 unsupported");
}

Mat unimodular_gcd_rows(const std::vector<Int>& v) {
  size_t n = v.size();
  if (n == 0) throw std::invalid_argument("unimodular_gcd_rows: empty vector");
  Mat u = identity_mat(static_cast<int>(n));
  std::vector<Int> w = v;
  // Fold entries 1..n-1 into entry 0 by extended gcd, accumulating the
  // 2x2 transforms into u.
  for (size_t k = 1; k < n; ++k) {
    if (w[k] == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[0].get_mpz_t(),
               w[k].get_mpz_t());
    Int p = w[0] / g, q = w[k] / g;
    // [s t; -q p] is unimodular: s*p + t*q = 1.
    for (size_t j = 0; j < n; ++j) {
      Int r0 = s * u[0][j] + t * u[k][j];
      Int rk = -q * u[0][j] + p * u[k][j];
      u[0][j] = r0;
      u[k][j] = rk;
    }
    w[k] = 0;
    w[0] = g;
  }
  if (w[0] < 0)
    for (size_t j = 0; j < n; ++j) u[0][j] = -u[0][j];
  return u;
}

Mat lattice_column_basis(const Mat& m) {
  check_rect(m);
  size_t nr = rows(m), nc = cols(m);
  Mat a = m;
  // Column-style Hermite reduction: clear row r to the right of pivot
  // column r using extended-gcd column operations.
  for (size_t r = 0; r < nr; ++r) {
    for (size_t c = r + 1; c < nc; ++c) {
      if (a[r][c] == 0) continue;
      if (a[r][r] == 0) {
        for (size_t i = 0; i < nr; ++i) std::swap(a[i][r], a[i][c]);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][r].get_mpz_t(),
                 a[r][c].get_mpz_t());
      Int p = a[r][r] / g, q = a[r][c] / g;
      for (size_t i = 0; i < nr; ++i) {
        Int vr = s * a[i][r] + t * a[i][c];
        Int vc = -q * a[i][r] + p * a[i][c];
        a[i][r] = vr;
        a[i][c] = vc;
      }
    }
    if (a[r][r] == 0)
      throw std::invalid_argument("lattice_column_basis: rank deficient");
  }
  Mat b(nr, std::vector<Int>(nr));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) b[i][j] = a[i][j];
  return b;
}

DiagResult diagonalize(Mat m) {
  check_rect(m);
  size_t nr = rows(m), nc = cols(m);
  Mat u = identity_mat(static_cast<int>(nr));
  Mat u_inv = identity_mat(static_cast<int>(nr));

  auto row_swap = [&](size_t i, size_t j) {
    std::swap(m[i], m[j]);
    std::swap(u[i], u[j]);
    for (size_t r = 0; r < nr; ++r) std::swap(u_inv[r][i], u_inv[r][j]);
  };
  auto row_add = [&](size_t dst, size_t src, const Int& k) {
    // row_dst += k * row_src; inverse transform: col_src -= k * col_dst
    for (size_t j = 0; j < nc; ++j) m[dst][j] += k * m[src][j];
    for (size_t j = 0; j < nr; ++j) u[dst][j] += k * u[src][j];
    for (size_t r = 0; r < nr; ++r) u_inv[r][src] -= k * u_inv[r][dst];
  };
  auto row_neg = [&](size_t i) {
    for (size_t j = 0; j < nc; ++j) m[i][j] = -m[i][j];
    for (size_t j = 0; j < nr; ++j) u[i][j] = -u[i][j];
    for (size_t r = 0; r < nr; ++r) u_inv[r][i] = -u_inv[r][i];
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < nr; ++r) std::swap(m[r][i], m[r][j]);
  };
  auto col_add = [&](size_t dst, size_t src, const Int& k) {
    for (size_t r = 0; r < nr; ++r) m[r][dst] += k * m[r][src];
  };

  size_t nmin = std::min(nr, nc);
  for (size_t p = 0; p < nmin; ++p) {
    for (;;) {
      // Move the smallest nonzero |entry| of the trailing block to the
      // pivot, then reduce its row and column; repeat until exact.
      size_t bi = p, bj = p;
      bool found = false;
      for (size_t i = p; i < nr; ++i)
        for (size_t j = p; j < nc; ++j)
          if (m[i][j] != 0 &&
              (!found || mpz_cmpabs(m[i][j].get_mpz_t(),
                                    m[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
            found = true;
          }
      if (!found) break;  // trailing block is zero
      if (bi != p) row_swap(p, bi);
      if (bj != p) col_swap(p, bj);
      if (m[p][p] < 0) row_neg(p);
      bool clean = true;
      for (size_t i = p + 1; i < nr; ++i)
        if (m[i][p] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m[i][p].get_mpz_t(), m[p][p].get_mpz_t());
          row_add(i, p, -q);
          if (m[i][p] != 0) clean = false;
        }
      for (size_t j = p + 1; j < nc; ++j)
        if (m[p][j] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m[p][j].get_mpz_t(), m[p][p].get_mpz_t());
          col_add(j, p, -q);
          if (m[p][j] != 0) clean = false;
        }
      if (clean) break;
    }
  }
  return {m, u, u_inv};
}

std::vector<Int> solve_integer(const Mat& a, const std::vector<Int>& b) {
  Int d = det(a);
  if (d == 0) throw std::invalid_argument("solve_integer: singular matrix");
  std::vector<Int> x = mat_vec(adjugate(a), b);
  for (Int& xi : x) {
    if (xi % d != 0)
      throw std::invalid_argument("solve_integer: non-integral solution");
    xi /= d;
  }
  return x;
}

}  // namespace tsing
