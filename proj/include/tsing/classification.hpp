#pragma once
// The classification data and its mechanical re-verification: the
// d-triple enumeration, the 14 toric families, the Alexeev-Nikulin
// matching table, the sporadic catalog and the degenerate-fibre
// validator. Table data is loaded from a versioned JSON file so that it
// stays diffable against the source tables.

#include <map>

#include "tsing/markov.hpp"
#include "tsing/toric.hpp"

namespace tsing {

struct FamilyRecord {
  std::string id;              // "1".."4", "5", "6.1".."8.4"
  int equation_family;         // base Markov-type equation 1..4
  std::array<Int, 3> coeffs;   // weight multipliers: w_i = coeffs[i] * t_i^2
  std::optional<QuotientAction> quotient;
  Int expected_k2;
  std::vector<Int> expected_d;  // sorted multiset of three d-values
};

struct ANRow {
  std::string an_number;           // Alexeev-Nikulin surface number
  std::vector<SingClass> x_sings;  // singular points only, sorted
  std::string y_family;
  Triple y_triple;
  std::vector<SingClass> y_sings;  // singular points only, sorted
  std::vector<Int> d_column;       // sorted
};

struct SporadicEntry {
  std::string label;
  int index;  // 1 or 2
  std::vector<SingClass> sings;
  std::string count;  // "1", "2" or "A1-family"
};

struct Tables {
  std::string schema;
  std::vector<FamilyRecord> families;
  std::vector<ANRow> an_rows;
  std::vector<SporadicEntry> sporadic;

  static Tables load(const std::string& path);
  const FamilyRecord& family(const std::string& id) const;
};

/// Path of the data file shipped with the source tree.
std::string default_tables_path();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  size_t passed() const;
  size_t failed() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// All unordered triples (d_0,d_1,d_2) of positive integers with
/// sum <= 11 such that (12 - sum) * d_0 d_1 d_2 is a perfect square,
/// paired with K^2 = 12 - sum. Exactly the d-columns of the two tables.
std::vector<std::pair<std::array<Int, 3>, Int>> enumerate_d_triples();

/// Fan of the family member at a solution triple of its base equation:
/// weights coeffs[i] * t_i^2, then the mu_e quotient when the family has
/// one. Throws (with the residual) if t does not solve the equation.
Fan2 build_family_fan(const FamilyRecord& rec, const Triple& t);

SurfaceReport build_family_surface(const FamilyRecord& rec, const Triple& t);

/// The three singularities predicted by arithmetic alone, one per
/// homogeneous-coordinate vertex: the chart group at vertex i is the
/// subgroup of (Z/e*w_i)^2 generated by e*(w_j, w_k) and
/// (w_i m_j - m_i w_j, w_i m_k - m_i w_k); its cyclic generator gives
/// 1/N(1,a). Independent of the fan construction.
std::array<SingClass, 3> predicted_singularities(const FamilyRecord& rec,
                                                 const Triple& t);

/// Full sweep of Thm. toric: for every family and every solution with
/// entries <= bound, the built surface matches the table row (d-values,
/// K^2, Noether, the Markov identity with integral square root, lattice
/// index e, coprimality) and the two singularity routes agree.
VerifyReport verify_theorem_toric(const Tables& tables, const Int& bound);

/// Per-row checks of the matching table: Y reproduces the stated
/// singularities, X is reachable by the T_d -> A_{d-1} / identity
/// rewriting, and the d-column matches both sides.
VerifyReport verify_an_table(const Tables& tables);

/// d-triple enumeration vs the embedded family table.
VerifyReport verify_d_triples(const Tables& tables);

/// Sporadic catalog consistency: K^2 = 9 - sum(mu) >= 1 per entry,
/// index-2 entries carry exactly one 1/4(1,1), and the multiplicities
/// reconcile to 20 isolated surfaces plus one 1-parameter family.
VerifyReport verify_sporadic(const Tables& tables);

/// Parameters for the lemma/property sweeps ("verify lemmas").
struct LemmaSweepParams {
  long roundtrip_n = 500;     // hj round trip + reversal duality
  long conjugate_n = 200;     // conjugate construction / involution
  int oracle_len = 7;         // T-string oracle equivalence
  int oracle_max_entry = 10;
  long lemma_pair_n = 60;     // conjugate pairs for Lem. T sweeps
  long lemma_t_max = 4;
  long lemma_b_extra_max = 5;
  int fsq_len = 7;            // F^2 = -1 / discrepancy range sweep
};

VerifyReport verify_lemmas(const LemmaSweepParams& params = {});

/// A candidate degenerate fibre: the main chain of self-intersection
/// values (1 marks a (-1)-curve), plus, for type (II), a branch of one
/// (-1)-curve and t (-2)-curves attached below entry branch_at.
struct FibreConfig {
  std::vector<Int> chain;
  std::optional<size_t> branch_at;
  size_t branch_twos = 0;  // t
};

enum class FibreType { O, I, II, Invalid };

/// Type (O): [1,2,...,2,1]. Type (I): [a_r..a_1, 1, b_1..b_s] with
/// conjugate sides (a lone [1] is a non-degenerate fibre and invalid).
/// Type (II): chain [a_r..a_1, t+2, b_1..b_s] with conjugate sides and
/// the branch attached at the t+2 entry. Anything else is Invalid;
/// malformed graphs throw.
FibreType validate_fibre(const FibreConfig& config);

std::string fibre_type_str(FibreType t);

}  // namespace tsing
