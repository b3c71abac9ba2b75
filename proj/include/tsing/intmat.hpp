#pragma once
// Small exact integer-matrix utilities used by the lattice/fan code:
// determinants, adjugates, extended-gcd unimodular row reduction,
// column-style lattice bases and Smith normal form with transform
// tracking. All matrices here are tiny (at most 3x4), so the
// implementations favour clarity over asymptotics.

#include "tsing/exactmath.hpp"

namespace tsing {

using Mat = std::vector<std::vector<Int>>;  // row-major, rectangular

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
std::vector<Int> mat_vec(const Mat& a, const std::vector<Int>& v);

Int det(const Mat& a);       // square, size <= 3
Mat adjugate(const Mat& a);  // square, size <= 3; a * adj = det * I

/// Unimodular U (n x n) with U * v = (g, 0, ..., 0)^T, g = gcd of entries.
Mat unimodular_gcd_rows(const std::vector<Int>& v);

/// Basis of the lattice spanned by the columns of m (full row rank
/// required), as a square lower-triangular matrix of columns.
Mat lattice_column_basis(const Mat& m);

/// Diagonalization S = U * M * V over Z by unimodular row and column
/// operations, with nonnegative diagonal. The divisibility chain of a
/// full Smith normal form is not enforced (no caller needs it). Only U
/// and its inverse are tracked; V is discarded.
struct DiagResult {
  Mat s;      // diagonal, same shape as input
  Mat u;      // unimodular row transform
  Mat u_inv;  // its inverse
};
DiagResult diagonalize(Mat m);

/// Exact solution of A x = b over the integers (A square, det != 0).
/// Throws if the solution is not integral.
std::vector<Int> solve_integer(const Mat& a, const std::vector<Int>& b);

}  // namespace tsing
