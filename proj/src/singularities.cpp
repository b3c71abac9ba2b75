#include "tsing/singularities.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace tsing {

namespace {

void check_sing_pre(const Int& n, const Int& a) {
  if (n < 1) throw std::invalid_argument("singularity: n must be >= 1");
  if (n == 1) return;
  if (!(0 < a && a < n))
    throw std::invalid_argument("singularity: need 0 < a < n");
  if (gcd(a, n) != 1)
    throw std::invalid_argument("singularity: gcd(a, n) != 1");
}

// Divisors of g, via trial division. The classify search only factors
// gcd(n, a+1), which is small unless (n, a) is close to a T-form.
std::vector<Int> divisors(const Int& g) {
  std::vector<std::pair<Int, unsigned>> fac;
  Int rest = g;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= rest; p += (p % 6 == 5) ? 2 : 4) strip(p);
  if (rest > 1) fac.emplace_back(rest, 1);
  std::vector<Int> out{1};
  for (const auto& [p, e] : fac) {
    size_t sz = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

QuotSing make_quot_sing(const Int& n, const Int& a) {
  check_sing_pre(n, a);
  if (n == 1) return {1, 0};
  Int inv = mod_inverse(a, n);
  return {n, std::min(a, inv)};
}

std::string QuotSing::str() const {
  if (n == 1) return "smooth";
  return "1/" + n.get_str() + "(1," + a.get_str() + ")";
}

SingClass SingClass::du_val_a(const Int& rank) {
  if (rank < 1) throw std::invalid_argument("A_r needs r >= 1");
  SingClass c;
  c.kind = SingKind::DuValA;
  c.r = rank;
  return c;
}

SingClass SingClass::du_val_d(const Int& rank) {
  if (rank < 4) throw std::invalid_argument("D_r needs r >= 4");
  SingClass c;
  c.kind = SingKind::DuValD;
  c.r = rank;
  return c;
}

SingClass SingClass::du_val_e(const Int& rank) {
  if (rank < 6 || rank > 8) throw std::invalid_argument("E_r needs r in {6,7,8}");
  SingClass c;
  c.kind = SingKind::DuValE;
  c.r = rank;
  return c;
}

SingClass SingClass::t_class(const Int& d, const Int& n0, const Int& a0) {
  if (d < 1 || n0 < 2 || a0 < 1 || a0 >= n0 || gcd(a0, n0) != 1)
    throw std::invalid_argument("t_class: bad parameters");
  SingClass c;
  c.kind = SingKind::TClass;
  c.d = d;
  c.n0 = n0;
  c.a0 = std::min(a0, Int(n0 - a0));
  return c;
}

SingClass SingClass::other_cyclic() {
  SingClass c;
  c.kind = SingKind::OtherCyclic;
  return c;
}

bool SingClass::operator==(const SingClass& o) const {
  return kind == o.kind && r == o.r && d == o.d && n0 == o.n0 && a0 == o.a0;
}

bool operator<(const SingClass& x, const SingClass& y) {
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  if (x.r != y.r) return x.r < y.r;
  if (x.d != y.d) return x.d < y.d;
  if (x.n0 != y.n0) return x.n0 < y.n0;
  return x.a0 < y.a0;
}

QuotSing SingClass::quot() const {
  switch (kind) {
    case SingKind::Smooth:
      return {1, 0};
    case SingKind::DuValA:
      return make_quot_sing(r + 1, r);  // A_r = 1/(r+1)(1, r)
    case SingKind::TClass:
      return make_quot_sing(d * n0 * n0, d * n0 * a0 - 1);
    default:
      throw std::domain_error("quot(): no cyclic model for this class");
  }
}

std::string SingClass::str() const {
  switch (kind) {
    case SingKind::Smooth:
      return "smooth";
    case SingKind::DuValA:
      return "A_" + r.get_str();
    case SingKind::DuValD:
      return "D_" + r.get_str();
    case SingKind::DuValE:
      return "E_" + r.get_str();
    case SingKind::TClass:
      return "T_" + d.get_str() + "=" + quot().str();
    case SingKind::OtherCyclic:
      return "non-T cyclic";
  }
  return "?";
}

ChainData chain_data(const Int& n, const Int& a) {
  ChainData c;
  c.string = hj_expand(n, a);
  for (const Int& b : c.string) c.self_intersections.push_back(-b);
  return c;
}

SingClass classify(const Int& n, const Int& a) {
  check_sing_pre(n, a);
  if (n == 1) return SingClass::smooth();
  if (a == n - 1) return SingClass::du_val_a(n - 1);

  // T-form search: n = d*n0^2 and a = d*n0*a0 - 1 for some n0 >= 2 with
  // gcd(a0, n0) = 1. Writing t = n/n0 = d*n0, the conditions become
  // t | gcd(n, a+1) and n0 = n/t | t, so it suffices to scan divisors of
  // gcd(n, a+1) instead of factoring n. Both representatives a, a^{-1}
  // are tried (the normal form is not duality-symmetric entry-wise).
  std::optional<SingClass> found;
  const Int inv = mod_inverse(a, n);
  for (const Int& rep : {a, inv}) {
    Int g = gcd(n, rep + 1);
    // Any admissible t divides g and satisfies n <= t^2, so small gcds
    // cannot carry a T-form and skip the divisor scan outright.
    if (g * g < n) continue;
    for (const Int& t : divisors(g)) {
      Int n0 = n / t;
      if (n0 < 2 || t % n0 != 0) continue;
      Int a0 = (rep + 1) / t;
      if (gcd(a0, n0) != 1) continue;
      SingClass c = SingClass::t_class(t / n0, n0, a0);
      if (found && !(*found == c))
        throw std::logic_error("classify: ambiguous T-form for " +
                               make_quot_sing(n, a).str());
      found = c;
    }
    if (rep == inv) break;  // a self-inverse: second pass is identical
  }
  return found ? *found : SingClass::other_cyclic();
}

SingClass classify(const QuotSing& q) { return classify(q.n, q.a); }

Int milnor_number(const SingClass& c) {
  switch (c.kind) {
    case SingKind::Smooth:
      return 0;
    case SingKind::DuValA:
    case SingKind::DuValD:
    case SingKind::DuValE:
      return c.r;
    case SingKind::TClass:
      return c.d - 1;
    case SingKind::OtherCyclic:
      throw std::domain_error("milnor_number: no Q-Gorenstein smoothing");
  }
  throw std::logic_error("milnor_number: bad kind");
}

Int d_value(const SingClass& c) { return milnor_number(c) + 1; }

std::set<HJString> generate_t_strings(const Int& d, int max_len) {
  if (d < 1) throw std::invalid_argument("generate_t_strings: d >= 1");
  HJString seed;
  if (d == 1) {
    seed = {4};
  } else {
    seed.push_back(3);
    for (Int i = 0; i < d - 2; ++i) seed.push_back(2);
    seed.push_back(3);
  }
  std::set<HJString> out;
  if (max_len < 1 || seed.size() > static_cast<size_t>(max_len)) return out;
  std::deque<HJString> queue{seed};
  out.insert(seed);
  while (!queue.empty()) {
    HJString s = std::move(queue.front());
    queue.pop_front();
    if (s.size() >= static_cast<size_t>(max_len)) continue;
    HJString left = s;
    left.front() += 1;
    left.push_back(2);
    HJString right;
    right.reserve(s.size() + 1);
    right.push_back(2);
    right.insert(right.end(), s.begin(), s.end());
    right.back() += 1;
    for (auto& t : {left, right})
      if (out.insert(t).second) queue.push_back(t);
  }
  return out;
}

std::optional<Int> is_t_string(const HJString& s) {
  Fraction f = hj_evaluate(s);
  SingClass c = classify(f.num, f.den);
  if (c.kind == SingKind::TClass) return c.d;
  return std::nullopt;
}

HJString conjugate_string(const HJString& s) {
  Fraction f = hj_evaluate(s);
  Fraction cf = conjugate_fraction(f.num, f.den);
  return hj_expand(cf.num, cf.den);
}

bool strings_conjugate(const HJString& x, const HJString& y) {
  return fractions_conjugate(hj_evaluate(x), hj_evaluate(y));
}

HJString s_string(const HJString& left, const HJString& right, const Int& t) {
  if (t < 0) throw std::invalid_argument("s_string: t >= 0");
  if (!strings_conjugate(left, right))
    throw std::invalid_argument("s_string: sides are not conjugate");
  HJString out(left.rbegin(), left.rend());
  out.push_back(t + 2);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

bool lemma_t1_check(const HJString& left, const HJString& right, const Int& t) {
  auto d = is_t_string(conjugate_string(s_string(left, right, t)));
  return d && *d == t + 1;
}

bool lemma_t2_check(const HJString& left, const HJString& right, const Int& t,
                    const Int& b_extra) {
  if (b_extra < 2) throw std::invalid_argument("lemma_t2_check: b_extra >= 2");
  HJString ext = s_string(left, right, t);
  ext.push_back(b_extra);
  // [d_1,...,d_u] is the conjugate read against the displayed orientation
  // of the S_t-string (the extension [d_1,...,d_u,b_{s+1}] is sensitive
  // to it, unlike plain T-membership).
  HJString conj = conjugate_string(ext);
  HJString d_string(conj.rbegin(), conj.rend());
  d_string.push_back(b_extra);
  auto d = is_t_string(d_string);
  return d && *d == t + 1;
}

std::vector<Rat> discrepancies(const HJString& s) {
  size_t r = s.size();
  if (r == 0) throw std::invalid_argument("discrepancies: empty string");
  for (const Int& b : s)
    if (b < 2) throw std::invalid_argument("discrepancies: entries must be >= 2");
  // Tridiagonal solve of (E_i.E_j) x = (b_i - 2): forward elimination,
  // then back substitution. The chain intersection matrix is negative
  // definite, so pivots never vanish.
  std::vector<Rat> diag(r), rhs(r);
  for (size_t i = 0; i < r; ++i) {
    diag[i] = Rat(Int(-s[i]));
    rhs[i] = Rat(Int(s[i] - 2));
    if (i > 0) {
      Rat w = 1 / diag[i - 1];
      diag[i] -= w;
      rhs[i] -= w * rhs[i - 1];
    }
  }
  std::vector<Rat> x(r);
  x[r - 1] = rhs[r - 1] / diag[r - 1];
  for (size_t i = r - 1; i-- > 0;) x[i] = (rhs[i] - x[i + 1]) / diag[i];
  return x;
}

Rat boundary_pullback_selfint(const HJString& s) {
  if (!is_t_string(s))
    throw std::invalid_argument("boundary_pullback_selfint: not a T-string");
  size_t r = s.size();
  // (D' + F).E_i = 0 with D' meeting the two end curves once each (the
  // single curve twice when r = 1). Solve (E_i.E_j) f = -(D'.E_i), then
  // evaluate the quadratic form F^2 = f^T (E_i.E_j) f.
  std::vector<Rat> diag(r), rhs(r);
  for (size_t i = 0; i < r; ++i) {
    diag[i] = Rat(Int(-s[i]));
    rhs[i] = 0;
  }
  if (r == 1) {
    rhs[0] = -2;
  } else {
    rhs[0] = -1;
    rhs[r - 1] = -1;
  }
  std::vector<Rat> d2 = diag, b2 = rhs;
  for (size_t i = 1; i < r; ++i) {
    Rat w = 1 / d2[i - 1];
    d2[i] -= w;
    b2[i] -= w * b2[i - 1];
  }
  std::vector<Rat> f(r);
  f[r - 1] = b2[r - 1] / d2[r - 1];
  for (size_t i = r - 1; i-- > 0;) f[i] = (b2[i] - f[i + 1]) / d2[i];
  Rat fsq = 0;
  for (size_t i = 0; i < r; ++i) {
    fsq += f[i] * f[i] * diag[i];
    if (i + 1 < r) fsq += 2 * f[i] * f[i + 1];
  }
  return fsq;
}

std::set<std::vector<SingClass>> t_fibre_partitions(const Int& d, const Int& n,
                                                    const Int& a) {
  if (d < 1) throw std::invalid_argument("t_fibre_partitions: d >= 1");
  if (n < 2) throw std::invalid_argument("t_fibre_partitions: n >= 2");
  Int a_red = a % n;
  if (a_red <= 0 || gcd(a_red, n) != 1)
    throw std::invalid_argument("t_fibre_partitions: need gcd(a, n) = 1, a > 0");

  auto a_part = [](const Int& e) {
    return e == 1 ? SingClass::smooth() : SingClass::du_val_a(e - 1);
  };
  auto t_part = [&](const Int& e) {
    return SingClass::t_class(e, n, a_red);
  };

  std::set<std::vector<SingClass>> out;
  // Enumerate partitions of d as non-increasing sequences.
  std::vector<Int> parts;
  auto emit = [&]() {
    std::vector<SingClass> plain;
    for (const Int& e : parts) plain.push_back(a_part(e));
    std::sort(plain.begin(), plain.end());
    out.insert(plain);
    std::set<Int> seen;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!seen.insert(parts[i]).second) continue;
      std::vector<SingClass> mixed;
      for (size_t j = 0; j < parts.size(); ++j)
        mixed.push_back(j == i ? t_part(parts[j]) : a_part(parts[j]));
      std::sort(mixed.begin(), mixed.end());
      out.insert(mixed);
    }
  };
  std::function<void(Int, Int)> rec = [&](Int remaining, Int max_part) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (Int e = std::min(remaining, max_part); e >= 1; --e) {
      parts.push_back(e);
      rec(remaining - e, e);
      parts.pop_back();
    }
  };
  rec(d, d);
  return out;
}

}  // namespace tsing
