#pragma once
// Classification of cyclic quotient singularities 1/n(1,a), recognition
// and generation of T_d-strings, Milnor numbers, exact discrepancies,
// and the string-level combinatorics of degenerate fibres (conjugate
// pairs, S_t-strings, boundary pullbacks).

#include <optional>
#include <set>
#include <vector>

#include "tsing/exactmath.hpp"

namespace tsing {

/// A cyclic quotient singularity 1/n(1,a), canonicalized so that
/// a <= a^{-1} mod n. 1/n(1,a) and 1/n(1,a') describe the same germ
/// with the two coordinates interchanged. n = 1 encodes a smooth point
/// (a is stored as 0).
struct QuotSing {
  Int n{1};
  Int a{0};

  bool operator==(const QuotSing& o) const { return n == o.n && a == o.a; }
  std::string str() const;  // "1/20(1,9)" or "smooth"
};

QuotSing make_quot_sing(const Int& n, const Int& a);

enum class SingKind { Smooth, DuValA, DuValD, DuValE, TClass, OtherCyclic };

/// Result of classifying a singularity. TClass(d, n0, a0) denotes
/// 1/(d*n0^2)(1, d*n0*a0 - 1) with n0 >= 2; its a0 is canonicalized to
/// min(a0, n0 - a0), matching the QuotSing canonicalization. The
/// degenerate n0 = 1 T-forms are reported as DuValA(d-1). Du Val D/E
/// classes enter only through the sporadic catalog.
struct SingClass {
  SingKind kind = SingKind::Smooth;
  Int r{0};                    // Du Val rank
  Int d{0}, n0{0}, a0{0};      // T-class parameters

  static SingClass smooth() { return {}; }
  static SingClass du_val_a(const Int& rank);
  static SingClass du_val_d(const Int& rank);
  static SingClass du_val_e(const Int& rank);
  static SingClass t_class(const Int& d, const Int& n0, const Int& a0);
  static SingClass other_cyclic();

  bool operator==(const SingClass& o) const;
  bool operator!=(const SingClass& o) const { return !(*this == o); }

  /// The underlying 1/n(1,a) germ (Smooth, DuValA and TClass only).
  QuotSing quot() const;

  std::string str() const;  // "A_3", "T_5 = 1/20(1,9)", "smooth", ...
};

bool operator<(const SingClass& x, const SingClass& y);

/// Minimal-resolution data of 1/n(1,a): the HJ string together with the
/// self-intersection numbers -b_i of the exceptional chain.
struct ChainData {
  HJString string;
  std::vector<Int> self_intersections;
};

ChainData chain_data(const Int& n, const Int& a);

SingClass classify(const Int& n, const Int& a);
SingClass classify(const QuotSing& q);

/// Milnor number of the Q-Gorenstein smoothing: r for Du Val A_r/D_r/E_r,
/// d-1 for a T_d point, 0 for a smooth point. OtherCyclic has no
/// Q-Gorenstein smoothing and is rejected.
Int milnor_number(const SingClass& c);

/// d = mu + 1.
Int d_value(const SingClass& c);

/// All T_d-strings of length <= max_len: closure of the seed ([4] for
/// d = 1, [3,2,...,2,3] with d-2 twos for d >= 2) under the two steps
/// [b_1,...,b_r] -> [b_1+1,b_2,...,b_r,2] and [2,b_1,...,b_r+1].
std::set<HJString> generate_t_strings(const Int& d, int max_len);

/// Arithmetic recognizer: classify(hj_evaluate(s)) pattern-matched.
/// Returns d for a T_d-string, absent otherwise (in particular for
/// Du Val strings).
std::optional<Int> is_t_string(const HJString& s);

HJString conjugate_string(const HJString& s);
bool strings_conjugate(const HJString& x, const HJString& y);

/// The S_t-string [a_r,...,a_1,t+2,b_1,...,b_s] built from a conjugate
/// pair left = [a_1..a_r], right = [b_1..b_s]. Throws if the inputs are
/// not conjugate.
HJString s_string(const HJString& left, const HJString& right, const Int& t);

/// The conjugate of an S_t-string is a T_{t+1}-string.
bool lemma_t1_check(const HJString& left, const HJString& right, const Int& t);

/// Appending b_extra to an S_t-string, taking the conjugate (read
/// against the displayed orientation) and re-appending b_extra yields a
/// T_{t+1}-string.
bool lemma_t2_check(const HJString& left, const HJString& right, const Int& t,
                    const Int& b_extra);

/// Discrepancies (a_i) of the minimal resolution chain: the unique exact
/// solution of sum_j a_j (E_i.E_j) = b_i - 2 with E_i^2 = -b_i and
/// E_i.E_{i+1} = 1.
std::vector<Rat> discrepancies(const HJString& s);

/// For a T-string s with boundary pair (uv = 0): write pi^* D = D' + F
/// and return F^2 (always -1; computed, not assumed). Throws on
/// non-T strings.
Rat boundary_pullback_selfint(const HJString& s);

/// Fibre singularity multisets of a Q-Gorenstein deformation of the
/// T_d-point 1/(d n^2)(1, d n a - 1): for every partition (e_1,...,e_s)
/// of d, both {A_{e_1-1},...,A_{e_s-1}} and the variant keeping one
/// T_{e_i}-point. A_0 entries are recorded as Smooth.
std::set<std::vector<SingClass>> t_fibre_partitions(const Int& d, const Int& n,
                                                    const Int& a);

}  // namespace tsing
