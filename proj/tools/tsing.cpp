// tsing: batch queries and verification sweeps over the classification
// machinery. Subcommands: hj, markov, surface, verify.
//
// Exit codes: 0 ok / verification passed, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "tsing/classification.hpp"
#include "tsing/report.hpp"

using nlohmann::json;
using namespace tsing;

namespace {

json sing_json(const SingClass& c) {
  json j{{"class", c.str()}};
  switch (c.kind) {
    case SingKind::Smooth:
      j["kind"] = "smooth";
      break;
    case SingKind::DuValA:
    case SingKind::DuValD:
    case SingKind::DuValE:
      j["kind"] = "duval";
      j["rank"] = c.r.get_str();
      break;
    case SingKind::TClass:
      j["kind"] = "T";
      j["d"] = c.d.get_str();
      j["n"] = c.n0.get_str();
      j["a"] = c.a0.get_str();
      break;
    case SingKind::OtherCyclic:
      j["kind"] = "other";
      break;
  }
  return j;
}

json check_json(const CheckResult& c) {
  json j{{"check", c.name}, {"pass", c.pass ? "yes" : "no"}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Triple parse_triple(const std::string& text) {
  std::array<std::string, 3> parts;
  size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos))
      throw std::invalid_argument("triple must be a,b,c");
    parts[i] = text.substr(start, comma == std::string::npos
                                      ? std::string::npos
                                      : comma - start);
    start = comma + 1;
  }
  Triple t;
  for (int i = 0; i < 3; ++i) {
    if (parts[i].empty() ||
        parts[i].find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("triple entries must be positive integers");
    t[i] = Int(parts[i]);
    if (t[i] <= 0) throw std::invalid_argument("triple entries must be positive");
  }
  return t;
}

void append_verify(Report& rep, const VerifyReport& vr, const std::string& scope) {
  for (const CheckResult& c : vr.checks) {
    json j = check_json(c);
    j["scope"] = scope;
    rep.records.push_back(std::move(j));
  }
}

int emit(const Report& rep, bool as_json) {
  if (as_json)
    rep.render_json(std::cout);
  else
    rep.render_text(std::cout);
  return rep.status == "fail" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for T-singularities, Markov-type "
               "equations and rank-1 toric degenerations"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json / --data after the subcommand
  bool as_json = false;
  std::string data_path = default_tables_path();
  app.add_flag("--json", as_json, "emit line-delimited JSON records");
  app.add_option("--data", data_path, "table data file")
      ->capture_default_str();

  // hj
  std::string hj_n, hj_a;
  auto* cmd_hj = app.add_subcommand("hj", "expand n/a and classify 1/n(1,a)");
  cmd_hj->add_option("n", hj_n)->required();
  cmd_hj->add_option("a", hj_a)->required();

  // markov
  int mk_family = 1;
  std::string mk_bound = "100";
  auto* cmd_markov =
      app.add_subcommand("markov", "enumerate Markov-type solutions");
  cmd_markov->add_option("family", mk_family, "equation family 1..4")
      ->required()
      ->check(CLI::Range(1, 4));
  cmd_markov->add_option("--bound", mk_bound, "max entry")
      ->capture_default_str();

  // surface
  std::string sf_family, sf_triple;
  auto* cmd_surface =
      app.add_subcommand("surface", "build one family surface and report it");
  cmd_surface->add_option("family", sf_family, "family id: 1..4, 5, 6.1..8.4")
      ->required();
  cmd_surface->add_option("triple", sf_triple, "solution a,b,c")->required();

  // verify
  std::string vf_scope, vf_bound = "100";
  auto* cmd_verify = app.add_subcommand("verify", "run verification sweeps");
  cmd_verify
      ->add_option("scope", vf_scope,
                   "d-triples | toric | an-table | sporadic | lemmas | all")
      ->required()
      ->check(CLI::IsMember(
          {"d-triples", "toric", "an-table", "sporadic", "lemmas", "all"}));
  cmd_verify->add_option("--bound", vf_bound, "max solution entry (toric sweep)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_hj) {
      Report rep;
      rep.command = "hj " + hj_n + " " + hj_a;
      Int n(hj_n), a(hj_a);
      HJString s = hj_expand(n, a);
      SingClass c = classify(n, a);
      Fraction cf = conjugate_fraction(n, a);
      Int dual = mod_inverse(a, n);
      ChainData chain = chain_data(n, a);
      json selfints = json::array();
      for (const Int& e : chain.self_intersections) selfints.push_back(e.get_str());
      json rec{{"n", n.get_str()},
               {"a", a.get_str()},
               {"string", hj_str(s)},
               {"self_intersections", selfints},
               {"dual_a", dual.get_str()},
               {"dual_string", hj_str(hj_expand(n, dual))},
               {"conjugate_fraction", cf.str()},
               {"conjugate_string", hj_str(conjugate_string(s))},
               {"classification", c.str()}};
      if (c.kind != SingKind::OtherCyclic) {
        rec["milnor"] = milnor_number(c).get_str();
        rec["d"] = d_value(c).get_str();
      }
      rep.records.push_back(std::move(rec));
      rep.summary = {{"entries", std::to_string(s.size())}};
      return emit(rep, as_json);
    }

    if (*cmd_markov) {
      Report rep;
      rep.command = "markov " + std::to_string(mk_family) + " --bound " + mk_bound;
      const MarkovEquation& eq = markov_equation(mk_family);
      auto sols = enumerate_solutions(eq, Int(mk_bound));
      std::vector<Triple> sorted(sols.begin(), sols.end());
      std::sort(sorted.begin(), sorted.end(), [](const Triple& x, const Triple& y) {
        Int mx = std::max({x[0], x[1], x[2]}), my = std::max({y[0], y[1], y[2]});
        if (mx != my) return mx < my;
        return x < y;
      });
      for (const Triple& t : sorted) {
        bool minimal = std::find(eq.minimal_solutions.begin(),
                                 eq.minimal_solutions.end(),
                                 t) != eq.minimal_solutions.end();
        rep.records.push_back(json{{"a", t[0].get_str()},
                                   {"b", t[1].get_str()},
                                   {"c", t[2].get_str()},
                                   {"minimal", minimal ? "yes" : "no"}});
      }
      rep.summary = {{"equation", eq.str()},
                     {"solutions", std::to_string(sorted.size())}};
      return emit(rep, as_json);
    }

    if (*cmd_surface) {
      Report rep;
      rep.command = "surface " + sf_family + " " + sf_triple;
      Tables tables = Tables::load(data_path);
      const FamilyRecord& fam = tables.family(sf_family);
      Triple t = parse_triple(sf_triple);
      Fan2 fan = build_family_fan(fam, t);
      SurfaceReport sr = surface_report(fan);
      json rec;
      json rays = json::array();
      for (const Vec2& v : fan.rays)
        rays.push_back(json::array({v.x.get_str(), v.y.get_str()}));
      rec["rays"] = rays;
      json ws = json::array();
      for (const Int& w : *fan.weights) ws.push_back(w.get_str());
      rec["weights"] = ws;
      if (fan.quotient) rec["e"] = fan.quotient->e.get_str();
      json sings = json::array();
      for (const SingClass& c : sr.singularities) sings.push_back(sing_json(c));
      rec["singularities"] = sings;
      json dv = json::array();
      for (const Int& d : sr.d_values) dv.push_back(d.get_str());
      rec["d_values"] = dv;
      rec["k2"] = sr.k2.get_str();
      rec["euler"] = std::to_string(sr.euler);
      rec["picard_rank"] = std::to_string(sr.picard_rank);
      rec["noether_ok"] = sr.noether_ok ? "yes" : "no";
      rep.records.push_back(std::move(rec));
      rep.status = sr.valid && sr.noether_ok ? "pass" : "fail";
      return emit(rep, as_json);
    }

    if (*cmd_verify) {
      Report rep;
      rep.command = "verify " + vf_scope + " --bound " + vf_bound;
      Tables tables = Tables::load(data_path);
      Int bound(vf_bound);
      size_t pass = 0, fail = 0;
      auto run = [&](const std::string& scope, const VerifyReport& vr) {
        append_verify(rep, vr, scope);
        pass += vr.passed();
        fail += vr.failed();
      };
      if (vf_scope == "d-triples" || vf_scope == "all")
        run("d-triples", verify_d_triples(tables));
      if (vf_scope == "toric" || vf_scope == "all")
        run("toric", verify_theorem_toric(tables, bound));
      if (vf_scope == "an-table" || vf_scope == "all")
        run("an-table", verify_an_table(tables));
      if (vf_scope == "sporadic" || vf_scope == "all")
        run("sporadic", verify_sporadic(tables));
      if (vf_scope == "lemmas" || vf_scope == "all")
        run("lemmas", verify_lemmas());
      rep.status = fail == 0 ? "pass" : "fail";
      rep.summary = {{"passed", std::to_string(pass)},
                     {"failed", std::to_string(fail)}};
      return emit(rep, as_json);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
