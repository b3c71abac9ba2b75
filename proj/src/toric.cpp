#include "tsing/toric.hpp"

#include <stdexcept>

#include "tsing/intmat.hpp"

namespace tsing {

namespace {

bool is_primitive(const Vec2& v) {
  if (v.x == 0 && v.y == 0) return false;
  Int gx = v.x, gy = v.y;
  mpz_abs(gx.get_mpz_t(), gx.get_mpz_t());
  mpz_abs(gy.get_mpz_t(), gy.get_mpz_t());
  return (gx == 0 || gy == 0) ? (gx + gy == 1) : gcd(gx, gy) == 1;
}

Vec2 primitivize(const Vec2& v, Int* factor = nullptr) {
  if (v.x == 0 && v.y == 0)
    throw std::invalid_argument("primitivize: zero vector");
  Int gx = v.x, gy = v.y;
  mpz_abs(gx.get_mpz_t(), gx.get_mpz_t());
  mpz_abs(gy.get_mpz_t(), gy.get_mpz_t());
  Int g = gx == 0 ? gy : (gy == 0 ? gx : gcd(gx, gy));
  if (factor) *factor = g;
  return {v.x / g, v.y / g};
}

// Orient the three rays counterclockwise; the only allowed fix is the
// reflection (x,y) -> (x,-y), which preserves ray order (and hence the
// ray <-> coordinate pairing) and does not change any cone singularity
// after canonicalization.
void orient_ccw(std::array<Vec2, 3>& rays) {
  Int d01 = det2(rays[0], rays[1]);
  Int d12 = det2(rays[1], rays[2]);
  Int d20 = det2(rays[2], rays[0]);
  if (d01 == 0 || d12 == 0 || d20 == 0)
    throw std::invalid_argument("fan: collinear rays");
  int pos = (d01 > 0) + (d12 > 0) + (d20 > 0);
  if (pos == 3) return;
  if (pos == 0) {
    for (Vec2& v : rays) v.y = -v.y;
    return;
  }
  throw std::invalid_argument("fan: rays do not positively span the plane");
}

}  // namespace

Int det2(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

QuotSing cone_singularity(const Vec2& u_in, const Vec2& v_in) {
  Vec2 u = u_in, v = v_in;
  if (!is_primitive(u) || !is_primitive(v))
    throw std::invalid_argument("cone_singularity: rays must be primitive");
  Int dt = det2(u, v);
  if (dt == 0) throw std::invalid_argument("cone_singularity: collinear rays");
  if (dt < 0) {
    std::swap(u, v);  // the cone is unordered; swapping gives the dual a
    dt = -dt;
  }
  if (dt == 1) return {1, 0};
  // Unimodular map sending u to (0,1): rows (-u.y, u.x) and (x, y) with
  // x*u.x + y*u.y = 1. Then v lands on (n, q) and shearing normalizes
  // q to -a with 0 <= a < n.
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), u.x.get_mpz_t(),
             u.y.get_mpz_t());
  Int q = x * v.x + y * v.y;
  Int a = (-q) % dt;
  if (a < 0) a += dt;
  if (a == 0)
    throw std::logic_error("cone_singularity: non-primitive second ray");
  return make_quot_sing(dt, a);
}

Fan2 wps_fan(const Int& w0, const Int& w1, const Int& w2) {
  std::array<Int, 3> w{w0, w1, w2};
  for (const Int& wi : w)
    if (wi <= 0) throw std::invalid_argument("wps_fan: weights must be positive");
  for (int i = 0; i < 3; ++i)
    if (gcd(w[i], w[(i + 1) % 3]) != 1)
      throw std::invalid_argument("wps_fan: weights must be pairwise coprime");
  // N = Z^3 / Z*w: pick unimodular U with U*w = (1,0,0); the last two
  // coordinates of U give the projection, and the rays are the images
  // of the standard basis.
  Mat u = unimodular_gcd_rows({w0, w1, w2});
  std::array<Vec2, 3> rays;
  for (int i = 0; i < 3; ++i) {
    rays[i] = Vec2{u[1][i], u[2][i]};
    Int factor;
    rays[i] = primitivize(rays[i], &factor);
    if (factor != 1)
      throw std::logic_error("wps_fan: non-primitive ray image");
  }
  orient_ccw(rays);
  // The relation must survive orientation fixes exactly.
  Vec2 rel{w0 * rays[0].x + w1 * rays[1].x + w2 * rays[2].x,
           w0 * rays[0].y + w1 * rays[1].y + w2 * rays[2].y};
  if (rel.x != 0 || rel.y != 0)
    throw std::logic_error("wps_fan: weight relation violated");
  Fan2 f;
  f.rays = rays;
  f.weights = w;
  return f;
}

Fan2 quotient_fan(const Fan2& wps, const Int& e, const std::array<Int, 3>& m) {
  if (!wps.weights || wps.quotient)
    throw std::invalid_argument("quotient_fan: input must be a plain wps fan");
  if (e < 2) throw std::invalid_argument("quotient_fan: e >= 2");
  const auto& w = *wps.weights;
  // Work with the scaled lattice eL, L = Z^3 + Z*(m/e): generators
  // e*I and m. The quotient lattice is L / Z*w, realized by a basis of
  // eL whose first vector is e*w.
  Mat gens(3, std::vector<Int>(4, 0));
  for (int i = 0; i < 3; ++i) {
    gens[i][i] = e;
    gens[i][3] = m[i] % e;
  }
  Mat basis = lattice_column_basis(gens);
  Int det_b = det(basis);
  mpz_abs(det_b.get_mpz_t(), det_b.get_mpz_t());
  // |L : Z^3| = e^3 / det(eL) must equal e.
  if (det_b * e != e * e * e)
    throw std::invalid_argument("quotient_fan: action has order != e");
  std::vector<Int> ew{e * w[0], e * w[1], e * w[2]};
  std::vector<Int> c = solve_integer(basis, ew);
  Int cg = gcd(gcd(abs(c[0]), abs(c[1])), abs(c[2]));
  if (cg != 1)
    throw std::invalid_argument(
        "quotient_fan: weight vector not primitive in the extended lattice");
  Mat v = unimodular_gcd_rows(c);  // v * c = (1,0,0)
  Int dv = det(v);
  Mat v_inv = adjugate(v);
  if (dv == -1)
    for (auto& row : v_inv)
      for (Int& x : row) x = -x;
  Mat tilted = mat_mul(basis, v_inv);  // first column is e*w
  std::array<Vec2, 3> rays;
  for (int i = 0; i < 3; ++i) {
    std::vector<Int> p(3, 0);
    p[i] = e;
    std::vector<Int> coords = solve_integer(tilted, p);
    Vec2 img{coords[1], coords[2]};
    if (img.x == 0 && img.y == 0)
      throw std::invalid_argument("quotient_fan: ray collapses");
    rays[i] = primitivize(img);
  }
  for (int i = 0; i < 3; ++i)
    if (det2(rays[i], rays[(i + 1) % 3]) == 0)
      throw std::invalid_argument("quotient_fan: rays collapse");
  orient_ccw(rays);
  Fan2 f;
  f.rays = rays;
  f.weights = w;
  f.quotient = QuotientAction{e, m};
  return f;
}

Rat k_squared(const Fan2& f) {
  const auto& v = f.rays;
  std::array<Int, 3> dets;
  for (int i = 0; i < 3; ++i) {
    dets[i] = det2(v[i], v[(i + 1) % 3]);
    if (dets[i] <= 0)
      throw std::invalid_argument("k_squared: fan must be counterclockwise");
  }
  // Mumford's formulas on a simplicial fan: for consecutive rays
  // v_{i-1}, v_i, v_{i+1},
  //   D_i^2      = -det(v_{i-1}, v_{i+1}) / (det(v_{i-1},v_i) det(v_i,v_{i+1}))
  //   D_i.D_{i+1} = 1 / det(v_i, v_{i+1})
  // and K = -(D_0 + D_1 + D_2).
  Rat k2 = 0;
  for (int i = 0; i < 3; ++i) {
    int prev = (i + 2) % 3, next = (i + 1) % 3;
    Rat self(Int(-det2(v[prev], v[next])), Int(dets[prev] * dets[i]));
    self.canonicalize();
    Rat cross(Int(1), dets[i]);
    cross.canonicalize();
    k2 += self + 2 * cross;
  }
  return k2;
}

std::array<Int, 3> fan_relation(const Fan2& f) {
  const auto& v = f.rays;
  // det(v1,v2) v0 + det(v2,v0) v1 + det(v0,v1) v2 = 0.
  std::array<Int, 3> rel{det2(v[1], v[2]), det2(v[2], v[0]), det2(v[0], v[1])};
  Int g = gcd(gcd(abs(rel[0]), abs(rel[1])), abs(rel[2]));
  for (Int& x : rel) x /= g;
  if (rel[0] <= 0 || rel[1] <= 0 || rel[2] <= 0)
    throw std::invalid_argument("fan_relation: fan must be counterclockwise");
  return rel;
}

Int SurfaceReport::milnor_sum() const {
  Int s = 0;
  for (const SingClass& c : singularities) s += milnor_number(c);
  return s;
}

SurfaceReport surface_report(const Fan2& f) {
  SurfaceReport rep;
  rep.k2 = k_squared(f);
  for (int i = 0; i < 3; ++i) {
    // vertex i <-> cone spanned by the other two rays
    QuotSing q = cone_singularity(f.rays[(i + 1) % 3], f.rays[(i + 2) % 3]);
    rep.singularities[i] = classify(q);
    if (rep.singularities[i].kind == SingKind::OtherCyclic) rep.valid = false;
  }
  if (rep.valid) {
    for (const SingClass& c : rep.singularities)
      rep.d_values.push_back(d_value(c));
    std::sort(rep.d_values.begin(), rep.d_values.end());
    rep.noether_ok = rep.k2 + 3 + Rat(rep.milnor_sum()) == 12;
  }
  return rep;
}

}  // namespace tsing
