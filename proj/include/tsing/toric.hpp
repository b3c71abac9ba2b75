#pragma once
// Complete fans with three rays in a rank-2 lattice: weighted projective
// planes, their cyclic quotients, cone singularities, and exact
// intersection numbers (K^2, Noether check).

#include <array>
#include <optional>

#include "tsing/exactmath.hpp"
#include "tsing/singularities.hpp"

namespace tsing {

struct Vec2 {
  Int x{0}, y{0};
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

Int det2(const Vec2& u, const Vec2& v);

struct QuotientAction {
  Int e;                  // order of the acting group mu_e
  std::array<Int, 3> m;   // diagonal weights on homogeneous coordinates
};

/// A complete fan with three rays, counterclockwise (consecutive
/// determinants positive). Provenance records how the fan was built:
/// the weights of the covering weighted projective plane, and the
/// quotient action when the surface is a mu_e-quotient of it.
struct Fan2 {
  std::array<Vec2, 3> rays;
  std::optional<std::array<Int, 3>> weights;
  std::optional<QuotientAction> quotient;
};

/// The singularity of the affine chart of the cone spanned by two
/// primitive rays: |det| = 1 is smooth, otherwise the unimodular
/// normal form u -> (0,1), v -> (n,-a) gives 1/n(1,a) (canonicalized,
/// so the answer does not depend on the ray order).
QuotSing cone_singularity(const Vec2& u, const Vec2& v);

/// Fan of P(w0,w1,w2) for pairwise coprime positive weights: the lattice
/// is Z^3 / Z*(w0,w1,w2) and the rays are the images of the standard
/// basis vectors.
Fan2 wps_fan(const Int& w0, const Int& w1, const Int& w2);

/// Fan of X = Y/mu_e for a weighted projective plane Y with diagonal
/// action weights m: the lattice is extended by (m0,m1,m2)/e and the
/// rays re-expressed and primitivized. The lattice index is checked to
/// equal e; inconsistent action data throws.
Fan2 quotient_fan(const Fan2& wps, const Int& e, const std::array<Int, 3>& m);

/// K^2 computed intrinsically from rational intersection numbers of the
/// boundary divisors on the (simplicial) fan.
Rat k_squared(const Fan2& f);

/// The unique primitive positive relation sum r_i * v_i = 0 among the
/// rays; recovers the weights of a wps_fan.
std::array<Int, 3> fan_relation(const Fan2& f);

struct SurfaceReport {
  // singularities[i] sits at the torus-fixed point of the cone spanned
  // by the other two rays (homogeneous coordinate vertex i).
  std::array<SingClass, 3> singularities;
  std::vector<Int> d_values;  // sorted, one entry per vertex
  Rat k2;
  int euler = 3;        // number of maximal cones
  int picard_rank = 1;  // rays - 2
  bool valid = true;    // false iff some cone is a non-T cyclic point
  bool noether_ok = false;

  Int milnor_sum() const;
};

SurfaceReport surface_report(const Fan2& f);

}  // namespace tsing
