#include "tsing/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsing {

Fraction::Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (num <= 0 || den <= 0)
    throw std::invalid_argument("Fraction: num and den must be positive");
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Fraction::str() const {
  return num.get_str() + "/" + den.get_str();
}

Int gcd(const Int& a, const Int& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd: negative input");
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int mod_inverse(const Int& a, const Int& n) {
  if (n < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()))
    throw std::invalid_argument("mod_inverse: gcd(a, n) != 1");
  return r;  // mpz_invert returns a value in [1, n-1]
}

HJString hj_expand(const Int& n, const Int& a) {
  if (!(0 < a && a < n)) throw std::invalid_argument("hj_expand: need 0 < a < n");
  if (gcd(a, n) != 1) throw std::invalid_argument("hj_expand: gcd(a, n) != 1");
  HJString out;
  Int num = n, den = a;
  while (den != 0) {
    Int b, rem;
    mpz_cdiv_qr(b.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(b);
    // ceil remainder is <= 0: b*den - num = -rem
    num = den;
    den = -rem;
  }
  return out;
}

Fraction hj_evaluate(const HJString& s) {
  if (s.empty())
    throw std::invalid_argument("hj_evaluate: empty string (smooth case) has no value");
  for (const Int& b : s)
    if (b < 2) throw std::invalid_argument("hj_evaluate: entries must be >= 2");
  // Right to left: x = b - 1/x', tracked as num/den. Entries >= 2 keep
  // num > den >= 1, and gcd(num, den) = 1 is preserved at every step.
  Int num = s.back(), den = 1;
  for (auto it = std::next(s.rbegin()); it != s.rend(); ++it) {
    Int next_num = *it * num - den;
    den = num;
    num = std::move(next_num);
  }
  return Fraction(num, den);
}

Fraction conjugate_fraction(const Int& n, const Int& a) {
  if (!(0 < a && a < n))
    throw std::invalid_argument("conjugate_fraction: need 0 < a < n");
  if (gcd(a, n) != 1)
    throw std::invalid_argument("conjugate_fraction: gcd(a, n) != 1");
  return Fraction(n, n - a);
}

bool fractions_conjugate(const Fraction& x, const Fraction& y) {
  return x.num == y.num && x.den + y.den == x.num;
}

HJString reversed(const HJString& s) {
  return HJString(s.rbegin(), s.rend());
}

std::string hj_str(const HJString& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace tsing
