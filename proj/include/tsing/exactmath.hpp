#pragma once
// Exact unbounded integer/rational arithmetic and Hirzebruch-Jung
// continued fractions. Everything downstream builds on this layer;
// no floating point is used anywhere in the library.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tsing {

using Int = mpz_class;
using Rat = mpq_class;

/// A positive fraction num/den, stored reduced (gcd(num, den) = 1).
struct Fraction {
  Int num{0};
  Int den{1};

  Fraction() = default;
  Fraction(Int n, Int d);  // reduces eagerly; requires n > 0, d > 0

  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }

  std::string str() const;  // "n/a"
};

/// Entries of a Hirzebruch-Jung string. Singularity strings have all
/// entries >= 2; degenerate-fibre chains may also contain 1 for
/// (-1)-curves (see the fibre validator).
using HJString = std::vector<Int>;

Int gcd(const Int& a, const Int& b);

/// Inverse of a modulo n (n >= 2), in [1, n-1]. Requires gcd(a, n) = 1.
Int mod_inverse(const Int& a, const Int& n);

/// Expansion of n/a (0 < a < n, gcd(a, n) = 1) as [b_1,...,b_r] with
/// n/a = b_1 - 1/(b_2 - 1/(... - 1/b_r)) and all b_i >= 2.
/// The recurrence is b_1 = ceil(n/a), then recurse on a/(b_1*a - n).
HJString hj_expand(const Int& n, const Int& a);

/// Inverse of hj_expand, evaluated right to left with exact arithmetic.
/// The empty string is reserved for the smooth case and rejected here.
Fraction hj_evaluate(const HJString& s);

/// n/a -> n/(n-a).
Fraction conjugate_fraction(const Int& n, const Int& a);

/// True iff y = n/(n-a) where x = n/a.
bool fractions_conjugate(const Fraction& x, const Fraction& y);

HJString reversed(const HJString& s);

std::string hj_str(const HJString& s);  // "[3,5,2]"

}  // namespace tsing
