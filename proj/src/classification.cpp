#include "tsing/classification.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tsing/intmat.hpp"

namespace tsing {

using nlohmann::json;

namespace {

Int json_int(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long>());
  throw std::invalid_argument("tables: expected integer or decimal string");
}

SingClass parse_sing(const json& j) {
  if (j.contains("A")) return SingClass::du_val_a(json_int(j["A"]));
  if (j.contains("D")) return SingClass::du_val_d(json_int(j["D"]));
  if (j.contains("E")) return SingClass::du_val_e(json_int(j["E"]));
  if (j.contains("frac")) {
    Int n = json_int(j["frac"][0]);
    Int a = json_int(j["frac"][1]);
    SingClass c = classify(n, a);
    if (c.kind == SingKind::OtherCyclic)
      throw std::invalid_argument("tables: non-T singularity " +
                                  make_quot_sing(n, a).str());
    return c;
  }
  throw std::invalid_argument("tables: unknown singularity descriptor");
}

std::vector<SingClass> parse_sings(const json& j) {
  std::vector<SingClass> out;
  for (const auto& e : j) out.push_back(parse_sing(e));
  std::sort(out.begin(), out.end());
  return out;
}

Int mod(const Int& x, const Int& n) {
  Int r = x % n;
  if (r < 0) r += n;
  return r;
}

std::optional<Int> exact_sqrt(const Int& x) {
  if (x < 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r == x) return r;
  return std::nullopt;
}

// Generator of the subgroup of (Z/N)^2 spanned by u and v, provided the
// subgroup is cyclic of order N. The lattice generated by u, v and N*I
// has a basis s_1*g_1, s_2*g_2 with g_i the (primitive) columns of the
// inverse row transform, so the subgroup is Z/(N/s_1) x Z/(N/s_2) and
// g = s_1 g_1 + s_2 g_2 generates it when the orders are coprime.
std::pair<Int, Int> cyclic_generator(const std::array<Int, 2>& u,
                                     const std::array<Int, 2>& v, const Int& N) {
  Mat m = {{u[0], v[0], N, Int(0)}, {u[1], v[1], Int(0), N}};
  DiagResult dr = diagonalize(m);
  Int s1 = dr.s[0][0], s2 = dr.s[1][1];
  if (s1 <= 0 || s2 <= 0 || N % s1 != 0 || N % s2 != 0)
    throw std::invalid_argument("cyclic_generator: degenerate subgroup");
  Int o1 = N / s1, o2 = N / s2;
  if (o1 * o2 != N)
    throw std::invalid_argument("cyclic_generator: subgroup order != N");
  if (gcd(o1, o2) != 1)
    throw std::invalid_argument("cyclic_generator: subgroup not cyclic");
  Int a = mod(s1 * dr.u_inv[0][0] + s2 * dr.u_inv[0][1], N);
  Int b = mod(s1 * dr.u_inv[1][0] + s2 * dr.u_inv[1][1], N);
  return {a, b};
}

std::vector<SingClass> strip_smooth(std::vector<SingClass> v) {
  v.erase(std::remove(v.begin(), v.end(), SingClass::smooth()), v.end());
  return v;
}

std::string sings_str(const std::vector<SingClass>& v) {
  if (v.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "}";
}

}  // namespace

std::string default_tables_path() {
#ifdef TSING_DATA_FILE
  return TSING_DATA_FILE;
#else
  return "data/tables.json";
#endif
}

Tables Tables::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table data file: " + path);
  json j = json::parse(in);
  Tables t;
  t.schema = j.at("schema").get<std::string>();
  if (t.schema != "tsing-tables/1")
    throw std::runtime_error("unsupported table schema: " + t.schema);

  for (const auto& f : j.at("families")) {
    FamilyRecord rec;
    rec.id = f.at("id").get<std::string>();
    if (f.contains("coeffs")) {
      rec.equation_family = f.at("equation").get<int>();
      for (int i = 0; i < 3; ++i) rec.coeffs[i] = json_int(f["coeffs"][i]);
    } else {
      const FamilyRecord& base = t.family(f.at("base").get<std::string>());
      rec.equation_family = base.equation_family;
      rec.coeffs = base.coeffs;
    }
    if (f.contains("e")) {
      QuotientAction q;
      q.e = json_int(f["e"]);
      for (int i = 0; i < 3; ++i) q.m[i] = json_int(f["m"][i]);
      rec.quotient = q;
    }
    rec.expected_k2 = json_int(f.at("k2"));
    for (const auto& dv : f.at("d")) rec.expected_d.push_back(json_int(dv));
    std::sort(rec.expected_d.begin(), rec.expected_d.end());
    Int dsum = 0;
    for (const Int& dv : rec.expected_d) dsum += dv;
    if (rec.expected_k2 != 12 - dsum)
      throw std::runtime_error("tables: family " + rec.id +
                               " violates k2 = 12 - sum(d)");
    t.families.push_back(std::move(rec));
  }

  for (const auto& r : j.at("an_rows")) {
    ANRow row;
    row.an_number = r.at("an").get<std::string>();
    row.x_sings = parse_sings(r.at("x"));
    row.y_family = r.at("y_family").get<std::string>();
    for (int i = 0; i < 3; ++i) row.y_triple[i] = json_int(r.at("y_triple")[i]);
    row.y_sings = parse_sings(r.at("y"));
    for (const auto& dv : r.at("d")) row.d_column.push_back(json_int(dv));
    std::sort(row.d_column.begin(), row.d_column.end());
    t.an_rows.push_back(std::move(row));
  }

  for (const auto& s : j.at("sporadic")) {
    SporadicEntry e;
    e.label = s.at("label").get<std::string>();
    e.index = s.at("index").get<int>();
    e.sings = parse_sings(s.at("sings"));
    e.count = s.at("count").get<std::string>();
    t.sporadic.push_back(std::move(e));
  }
  return t;
}

const FamilyRecord& Tables::family(const std::string& id) const {
  for (const FamilyRecord& f : families)
    if (f.id == id) return f;
  throw std::invalid_argument("unknown family id: " + id);
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

size_t VerifyReport::passed() const {
  return static_cast<size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

size_t VerifyReport::failed() const { return checks.size() - passed(); }

void VerifyReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

std::vector<std::pair<std::array<Int, 3>, Int>> enumerate_d_triples() {
  std::vector<std::pair<std::array<Int, 3>, Int>> out;
  for (long d0 = 1; d0 <= 9; ++d0)
    for (long d1 = d0; d0 + d1 <= 10; ++d1)
      for (long d2 = d1; d0 + d1 + d2 <= 11; ++d2) {
        Int k2 = 12 - d0 - d1 - d2;
        if (exact_sqrt(k2 * d0 * d1 * d2))
          out.push_back({{Int(d0), Int(d1), Int(d2)}, k2});
      }
  return out;
}

Fan2 build_family_fan(const FamilyRecord& rec, const Triple& t) {
  const MarkovEquation& eq = markov_equation(rec.equation_family);
  Int res = equation_residual(eq, t);
  if (res != 0)
    throw std::invalid_argument("triple " + triple_str(t) +
                                " does not solve " + eq.str() +
                                " (residual " + res.get_str() + ")");
  std::array<Int, 3> w;
  for (int i = 0; i < 3; ++i) w[i] = rec.coeffs[i] * t[i] * t[i];
  Fan2 f = wps_fan(w[0], w[1], w[2]);
  if (rec.quotient) f = quotient_fan(f, rec.quotient->e, rec.quotient->m);
  return f;
}

SurfaceReport build_family_surface(const FamilyRecord& rec, const Triple& t) {
  return surface_report(build_family_fan(rec, t));
}

std::array<SingClass, 3> predicted_singularities(const FamilyRecord& rec,
                                                 const Triple& t) {
  const MarkovEquation& eq = markov_equation(rec.equation_family);
  Int res = equation_residual(eq, t);
  if (res != 0)
    throw std::invalid_argument("triple " + triple_str(t) +
                                " does not solve " + eq.str() +
                                " (residual " + res.get_str() + ")");
  std::array<Int, 3> w;
  for (int i = 0; i < 3; ++i) w[i] = rec.coeffs[i] * t[i] * t[i];
  Int e = rec.quotient ? rec.quotient->e : Int(1);
  std::array<Int, 3> m =
      rec.quotient ? rec.quotient->m : std::array<Int, 3>{0, 0, 0};
  std::array<SingClass, 3> out;
  for (int i = 0; i < 3; ++i) {
    int jj = (i + 1) % 3, kk = (i + 2) % 3;
    Int n = e * w[i];
    if (n == 1) {
      out[i] = SingClass::smooth();
      continue;
    }
    std::array<Int, 2> u{mod(e * w[jj], n), mod(e * w[kk], n)};
    std::array<Int, 2> v{mod(w[i] * m[jj] - m[i] * w[jj], n),
                         mod(w[i] * m[kk] - m[i] * w[kk], n)};
    auto [ga, gb] = cyclic_generator(u, v, n);
    Int a;
    if (ga != 0 && gcd(ga, n) == 1) {
      a = mod(mod_inverse(ga, n) * gb, n);
    } else if (gb != 0 && gcd(gb, n) == 1) {
      a = mod(mod_inverse(gb, n) * ga, n);
    } else {
      throw std::invalid_argument(
          "predicted_singularities: action is not free in codimension 1");
    }
    if (a == 0)
      throw std::invalid_argument(
          "predicted_singularities: quasi-reflection in chart group");
    out[i] = classify(n, a);
  }
  return out;
}

VerifyReport verify_theorem_toric(const Tables& tables, const Int& bound) {
  VerifyReport rep;
  for (const FamilyRecord& fam : tables.families) {
    const MarkovEquation& eq = markov_equation(fam.equation_family);
    // Every family contributes at least its minimal solutions, whatever
    // the bound.
    Int eff = bound;
    for (const Triple& ms : eq.minimal_solutions)
      eff = std::max(eff, std::max({ms[0], ms[1], ms[2]}));
    for (const Triple& t : enumerate_solutions(eq, eff)) {
      std::string name = "family " + fam.id + " at " + triple_str(t);
      try {
        std::array<Int, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = fam.coeffs[i] * t[i] * t[i];
        Int e = fam.quotient ? fam.quotient->e : Int(1);

        Fan2 fan = build_family_fan(fam, t);
        SurfaceReport sr = surface_report(fan);
        std::ostringstream bad;

        if (!sr.valid) bad << "[non-T cone] ";
        if (sr.d_values != fam.expected_d) bad << "[d-values mismatch] ";
        if (sr.k2 != Rat(fam.expected_k2)) bad << "[K^2 mismatch] ";
        if (!sr.noether_ok) bad << "[Noether fails] ";

        // K^2 cross-check against (sum w)^2 / (prod w * e).
        Rat k2w(Int((w[0] + w[1] + w[2]) * (w[0] + w[1] + w[2])),
                Int(w[0] * w[1] * w[2] * e));
        k2w.canonicalize();
        if (sr.k2 != k2w) bad << "[K^2 weight formula mismatch] ";

        // Arithmetic route must agree with the fan route at each vertex.
        std::array<SingClass, 3> pred = predicted_singularities(fam, t);
        for (int i = 0; i < 3; ++i)
          if (!(pred[i] == sr.singularities[i])) {
            bad << "[vertex " << i << ": predicted " << pred[i].str()
                << " != fan " << sr.singularities[i].str() << "] ";
            break;
          }

        // Markov identity: sum d_i n_i^2 = sqrt(K^2 d_0 d_1 d_2) n_0 n_1 n_2,
        // with d_i n_i^2 = e w_i positionally.
        std::array<Int, 3> dd, nn;
        for (int i = 0; i < 3; ++i) {
          const SingClass& c = sr.singularities[i];
          if (c.kind == SingKind::TClass) {
            dd[i] = c.d;
            nn[i] = c.n0;
          } else if (c.kind == SingKind::DuValA) {
            dd[i] = c.r + 1;
            nn[i] = 1;
          } else {
            dd[i] = 1;
            nn[i] = 1;
          }
          if (dd[i] * nn[i] * nn[i] != e * w[i])
            bad << "[d_i n_i^2 != e w_i at vertex " << i << "] ";
        }
        auto lambda = exact_sqrt(fam.expected_k2 * dd[0] * dd[1] * dd[2]);
        if (!lambda) {
          bad << "[sqrt(K^2 d0 d1 d2) not integral] ";
        } else {
          Int lhs = dd[0] * nn[0] * nn[0] + dd[1] * nn[1] * nn[1] +
                    dd[2] * nn[2] * nn[2];
          if (lhs != *lambda * nn[0] * nn[1] * nn[2])
            bad << "[Markov identity fails] ";
        }

        // e = gcd(d_0 n_0^2, d_1 n_1^2, d_2 n_2^2).
        Int g = gcd(gcd(dd[0] * nn[0] * nn[0], dd[1] * nn[1] * nn[1]),
                    dd[2] * nn[2] * nn[2]);
        if (g != e) bad << "[gcd(d_i n_i^2) != e] ";

        // For the plain wps families the weights are pairwise coprime.
        if (!fam.quotient)
          for (int i = 0; i < 3; ++i)
            if (gcd(w[i], w[(i + 1) % 3]) != 1) bad << "[weights not coprime] ";

        std::string b = bad.str();
        rep.add(std::move(name), b.empty(), b);
      } catch (const std::exception& ex) {
        rep.add(std::move(name), false, std::string("exception: ") + ex.what());
      }
    }
  }
  return rep;
}

VerifyReport verify_d_triples(const Tables& tables) {
  VerifyReport rep;
  auto got = enumerate_d_triples();
  rep.add("exactly 14 d-triples", got.size() == 14,
          "found " + std::to_string(got.size()));

  std::set<std::vector<Int>> got_set, want_set;
  bool k2_ok = true, no7 = true;
  for (const auto& [d, k2] : got) {
    got_set.insert({d[0], d[1], d[2]});
    if (k2 != 12 - d[0] - d[1] - d[2]) k2_ok = false;
    if (k2 == 7) no7 = false;
  }
  for (const FamilyRecord& f : tables.families) want_set.insert(f.expected_d);
  rep.add("d-triples equal the union of the table d columns",
          got_set == want_set,
          "enumerated " + std::to_string(got_set.size()) + ", table " +
              std::to_string(want_set.size()));
  rep.add("K^2 = 12 - sum(d) throughout", k2_ok);
  rep.add("no triple with K^2 = 7", no7);

  // Each enumerated K^2 must match the table family with the same d.
  bool match = true;
  for (const auto& [d, k2] : got) {
    std::vector<Int> key{d[0], d[1], d[2]};
    for (const FamilyRecord& f : tables.families)
      if (f.expected_d == key && f.expected_k2 != k2) match = false;
  }
  rep.add("K^2 values match the table K^2 column", match);
  return rep;
}

VerifyReport verify_an_table(const Tables& tables) {
  VerifyReport rep;
  for (const ANRow& row : tables.an_rows) {
    std::string name = "AN " + row.an_number + " (Y = family " + row.y_family +
                       " at " + triple_str(row.y_triple) + ")";
    try {
      const FamilyRecord& fam = tables.family(row.y_family);
      SurfaceReport sr = build_family_surface(fam, row.y_triple);
      std::ostringstream bad;

      std::vector<SingClass> built(sr.singularities.begin(),
                                   sr.singularities.end());
      std::sort(built.begin(), built.end());
      built = strip_smooth(built);
      if (built != row.y_sings)
        bad << "[Y singularities: built " << sings_str(built) << " != table "
            << sings_str(row.y_sings) << "] ";

      if (sr.d_values != row.d_column) bad << "[d column != Y d-values] ";

      Int dsum = 0;
      for (const Int& dv : row.d_column) dsum += dv;
      if (Rat(Int(12 - dsum)) != sr.k2) bad << "[sum(d) != 12 - K^2] ";

      // X reachable from Y: each T_d point stays or becomes A_{d-1}
      // (A_0 = smooth), Du Val points stay.
      size_t nt = 0;
      for (const SingClass& c : row.y_sings)
        if (c.kind == SingKind::TClass) ++nt;
      bool reachable = false;
      for (size_t mask = 0; mask < (size_t(1) << nt) && !reachable; ++mask) {
        std::vector<SingClass> xs;
        size_t ti = 0;
        for (const SingClass& c : row.y_sings) {
          if (c.kind != SingKind::TClass) {
            xs.push_back(c);
            continue;
          }
          bool deform = (mask >> ti++) & 1;
          if (!deform) {
            xs.push_back(c);
          } else if (c.d >= 2) {
            xs.push_back(SingClass::du_val_a(c.d - 1));
          }  // d = 1: smoothed, drop
        }
        std::sort(xs.begin(), xs.end());
        if (xs == row.x_sings) reachable = true;
      }
      if (!reachable)
        bad << "[X " << sings_str(row.x_sings)
            << " not reachable by T_d -> A_{d-1} rewriting] ";

      // d column against the X side, padded with 1s to three vertices.
      std::vector<Int> xd;
      for (const SingClass& c : row.x_sings) xd.push_back(d_value(c));
      while (xd.size() < 3) xd.push_back(1);
      std::sort(xd.begin(), xd.end());
      if (xd != row.d_column) bad << "[d column != X d-values] ";

      Int mu_x = 0, mu_y = 0;
      for (const SingClass& c : row.x_sings) mu_x += milnor_number(c);
      for (const SingClass& c : row.y_sings) mu_y += milnor_number(c);
      if (mu_x != mu_y) bad << "[sum(mu) differs between X and Y] ";

      std::string b = bad.str();
      rep.add(std::move(name), b.empty(), b);
    } catch (const std::exception& ex) {
      rep.add(std::move(name), false, std::string("exception: ") + ex.what());
    }
  }
  return rep;
}

VerifyReport verify_sporadic(const Tables& tables) {
  VerifyReport rep;
  long isolated = 0, one_param = 0;
  for (const SporadicEntry& e : tables.sporadic) {
    std::ostringstream bad;
    Int mu = 0;
    size_t quarter_points = 0;
    for (const SingClass& c : e.sings) {
      mu += milnor_number(c);
      if (c.kind == SingKind::TClass) {
        if (!(c == SingClass::t_class(1, 2, 1)))
          bad << "[non-1/4(1,1) T point] ";
        ++quarter_points;
      }
    }
    Int k2 = 9 - mu;
    if (mu > 8) bad << "[sum(mu) > 8] ";
    if (k2 < 1) bad << "[K^2 = 9 - sum(mu) < 1] ";
    if (e.index == 1 && quarter_points != 0)
      bad << "[index-1 entry with an index-2 point] ";
    if (e.index == 2 && quarter_points != 1)
      bad << "[index-2 entry must have exactly one 1/4(1,1)] ";
    if (e.count == "1")
      isolated += 1;
    else if (e.count == "2")
      isolated += 2;
    else if (e.count == "A1-family")
      one_param += 1;
    else
      bad << "[unknown multiplicity '" << e.count << "'] ";
    std::string b = bad.str();
    rep.add("sporadic " + e.label + " (K^2 = " + k2.get_str() + ")", b.empty(),
            b);
  }
  rep.add("18 configurations",
          tables.sporadic.size() == 18,
          "found " + std::to_string(tables.sporadic.size()));
  rep.add("20 isolated surfaces and one 1-parameter family",
          isolated == 20 && one_param == 1,
          "isolated " + std::to_string(isolated) + ", families " +
              std::to_string(one_param));
  return rep;
}

VerifyReport verify_lemmas(const LemmaSweepParams& p) {
  VerifyReport rep;

  // Round trip and reversal duality over all coprime (n, a).
  {
    long total = 0, bad = 0;
    for (long n = 2; n <= p.roundtrip_n; ++n)
      for (long a = 1; a < n; ++a) {
        if (gcd(Int(a), Int(n)) != 1) continue;
        ++total;
        HJString s = hj_expand(n, a);
        Fraction f = hj_evaluate(s);
        if (f.num != n || f.den != a) ++bad;
        if (reversed(s) != hj_expand(n, mod_inverse(a, n))) ++bad;
      }
    rep.add("hj round trip + reversal duality, n <= " +
                std::to_string(p.roundtrip_n),
            bad == 0, std::to_string(total) + " pairs");
  }

  // Conjugation: involution, string involution, construction from [2],[2].
  {
    long total = 0, bad = 0;
    for (long n = 2; n <= p.conjugate_n; ++n)
      for (long a = 1; a < n; ++a) {
        if (gcd(Int(a), Int(n)) != 1) continue;
        ++total;
        Fraction c = conjugate_fraction(n, a);
        Fraction cc = conjugate_fraction(c.num, c.den);
        if (cc.num != n || cc.den != a) ++bad;
        HJString s = hj_expand(n, a);
        if (conjugate_string(conjugate_string(s)) != s) ++bad;
        // Step: conjugate pair (n/a, n/(n-a)) -> ((n+a)/a, (n+a)/n).
        HJString sc = hj_expand(c.num, c.den);
        HJString up = s;
        up.front() += 1;
        HJString upc;
        upc.push_back(2);
        upc.insert(upc.end(), sc.begin(), sc.end());
        if (!strings_conjugate(up, upc)) ++bad;
        // Converse: strip to [2],[2]. At each step exactly one side
        // starts with an entry >= 3 (they cannot both start with 2
        // unless n = 2a, the base pair).
        HJString x = s, y = sc;
        bool ok = true;
        while (!(x.size() == 1 && x[0] == 2 && y.size() == 1 && y[0] == 2)) {
          // Away from the base pair exactly one side starts with 2.
          if (x.front() >= 3 && y.front() == 2 && y.size() > 1) {
            x.front() -= 1;
            y.erase(y.begin());
          } else if (y.front() >= 3 && x.front() == 2 && x.size() > 1) {
            y.front() -= 1;
            x.erase(x.begin());
          } else {
            ok = false;
            break;
          }
        }
        if (!ok || !strings_conjugate(x, y)) ++bad;
      }
    rep.add("conjugation involution + construction from [2],[2], n <= " +
                std::to_string(p.conjugate_n),
            bad == 0, std::to_string(total) + " pairs");
  }

  // classify is duality-invariant.
  {
    long total = 0, bad = 0;
    for (long n = 2; n <= p.conjugate_n; ++n)
      for (long a = 1; a < n; ++a) {
        if (gcd(Int(a), Int(n)) != 1) continue;
        ++total;
        if (!(classify(Int(n), Int(a)) ==
              classify(Int(n), mod_inverse(a, n))))
          ++bad;
      }
    rep.add("classify agrees under duality, n <= " +
                std::to_string(p.conjugate_n),
            bad == 0, std::to_string(total) + " pairs");
  }

  // Oracle equivalence: arithmetic recognizer vs generative closure.
  {
    std::map<HJString, Int> generated;
    for (long d = 1; d <= p.oracle_len; ++d)
      for (const HJString& s : generate_t_strings(d, p.oracle_len)) {
        bool small = std::all_of(s.begin(), s.end(), [&](const Int& b) {
          return b <= p.oracle_max_entry;
        });
        if (small) generated.emplace(s, d);
      }
    long long total = 0, bad = 0;
    HJString s;
    std::function<void()> walk = [&]() {
      if (!s.empty()) {
        ++total;
        auto dr = is_t_string(s);
        auto it = generated.find(s);
        bool match = dr ? (it != generated.end() && it->second == *dr)
                        : (it == generated.end());
        if (!match) ++bad;
      }
      if (s.size() == static_cast<size_t>(p.oracle_len)) return;
      s.push_back(2);
      for (long b = 2; b <= p.oracle_max_entry; ++b) {
        s.back() = b;
        walk();
      }
      s.pop_back();
    };
    walk();
    rep.add("T-string oracle equivalence, len <= " +
                std::to_string(p.oracle_len) + ", entries <= " +
                std::to_string(p.oracle_max_entry),
            bad == 0, std::to_string(total) + " strings, " +
                std::to_string(generated.size()) + " generated");
  }

  // Structural properties of generated T_d-strings, F^2 and discrepancies.
  {
    long total = 0, bad_dual = 0, bad_sum = 0, bad_fsq = 0, bad_disc = 0;
    for (long d = 1; d <= p.fsq_len; ++d)
      for (const HJString& s : generate_t_strings(d, p.fsq_len)) {
        ++total;
        auto dv = is_t_string(reversed(s));
        if (!dv || *dv != d) ++bad_dual;
        Int bsum = 0;
        for (const Int& b : s) bsum += b;
        if (bsum != 3 * Int(s.size()) + 2 - d) ++bad_sum;
        if (boundary_pullback_selfint(s) != -1) ++bad_fsq;
        bool all2 = std::all_of(s.begin(), s.end(),
                                [](const Int& b) { return b == 2; });
        for (const Rat& a : discrepancies(s)) {
          if (all2 ? !(a == 0) : !(a > -1 && a < 0)) ++bad_disc;
        }
      }
    rep.add("T-string reversal closure, len <= " + std::to_string(p.fsq_len),
            bad_dual == 0, std::to_string(total) + " strings");
    rep.add("sum b_i = 3r + 2 - d (sum E_i^2 = d - 3r - 2)", bad_sum == 0);
    rep.add("F^2 = -1 for every T-string, len <= " + std::to_string(p.fsq_len),
            bad_fsq == 0);
    rep.add("discrepancies in (-1,0), or 0 for Du Val chains", bad_disc == 0);
  }

  // Lem. T: S_t-string conjugates are T_{t+1}-strings.
  {
    long total1 = 0, bad1 = 0, total2 = 0, bad2 = 0;
    for (long n = 2; n <= p.lemma_pair_n; ++n)
      for (long a = 1; a < n; ++a) {
        if (gcd(Int(a), Int(n)) != 1) continue;
        HJString left = hj_expand(n, a);
        HJString right = hj_expand(n, n - a);
        for (long t = 0; t <= p.lemma_t_max; ++t) {
          ++total1;
          if (!lemma_t1_check(left, right, t)) ++bad1;
          for (long b = 2; b <= p.lemma_b_extra_max; ++b) {
            ++total2;
            if (!lemma_t2_check(left, right, t, b)) ++bad2;
          }
        }
      }
    rep.add("Lem. T(1): conjugate of an S_t-string is a T_{t+1}-string, n <= " +
                std::to_string(p.lemma_pair_n),
            bad1 == 0, std::to_string(total1) + " cases");
    rep.add("Lem. T(2): appended conjugate is a T_{t+1}-string", bad2 == 0,
            std::to_string(total2) + " cases");
  }

  return rep;
}

FibreType validate_fibre(const FibreConfig& cfg) {
  const auto& c = cfg.chain;
  if (c.empty()) throw std::invalid_argument("validate_fibre: empty chain");
  for (const Int& e : c)
    if (e < 1) throw std::invalid_argument("validate_fibre: entries must be >= 1");

  if (cfg.branch_at) {
    if (*cfg.branch_at >= c.size())
      throw std::invalid_argument("validate_fibre: branch attachment out of range");
    // Type (II) candidate: main chain all >= 2, centre t+2, conjugate sides.
    for (const Int& e : c)
      if (e < 2) return FibreType::Invalid;
    size_t pos = *cfg.branch_at;
    if (c[pos] != Int(cfg.branch_twos) + 2) return FibreType::Invalid;
    if (pos == 0 || pos + 1 == c.size()) return FibreType::Invalid;
    HJString a(c.rend() - pos, c.rend());  // reversed left part
    HJString b(c.begin() + pos + 1, c.end());
    return strings_conjugate(a, b) ? FibreType::II : FibreType::Invalid;
  }

  size_t ones = 0;
  for (const Int& e : c) ones += (e == 1);
  if (ones == 2 && c.front() == 1 && c.back() == 1) {
    bool mid2 = std::all_of(c.begin() + 1, c.end() - 1,
                            [](const Int& e) { return e == 2; });
    if (mid2) return FibreType::O;
    return FibreType::Invalid;
  }
  if (ones == 1) {
    size_t pos = static_cast<size_t>(
        std::find(c.begin(), c.end(), Int(1)) - c.begin());
    if (pos == 0 || pos + 1 == c.size()) return FibreType::Invalid;
    HJString a(c.rend() - pos, c.rend());
    HJString b(c.begin() + pos + 1, c.end());
    return strings_conjugate(a, b) ? FibreType::I : FibreType::Invalid;
  }
  return FibreType::Invalid;
}

std::string fibre_type_str(FibreType t) {
  switch (t) {
    case FibreType::O:
      return "O";
    case FibreType::I:
      return "I";
    case FibreType::II:
      return "II";
    case FibreType::Invalid:
      return "invalid";
  }
  return "?";
}

}  // namespace tsing
