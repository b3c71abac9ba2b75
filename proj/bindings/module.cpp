// Python bindings for the core operations. Unbounded integers cross the
// boundary as python ints (via decimal strings, exact at any size) and
// rationals as fractions.Fraction.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsing/classification.hpp"

namespace py = pybind11;
using namespace tsing;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(std::string(py::str(src)), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return handle(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(mpz_class(std::string(py::str(src)), 10));
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      mpz_class num(std::string(py::str(src.attr("numerator"))), 10);
      mpz_class den(std::string(py::str(src.attr("denominator"))), 10);
      if (den == 0) return false;
      value = mpq_class(num, den);
      value.canonicalize();
      return true;
    }
    return false;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::string fibre_input_repr(const FibreConfig& c) {
  std::string s = "FibreConfig(chain=" + hj_str(c.chain);
  if (c.branch_at)
    s += ", branch_at=" + std::to_string(*c.branch_at) +
         ", branch_twos=" + std::to_string(c.branch_twos);
  return s + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact combinatorics of T-singularities, Markov-type equations "
            "and rank-1 toric degenerations";

  // ---- exactmath ----------------------------------------------------
  py::class_<Fraction>(m, "Frac")
      .def(py::init<Int, Int>())
      .def_readonly("num", &Fraction::num)
      .def_readonly("den", &Fraction::den)
      .def(py::self == py::self)
      .def("__repr__", &Fraction::str);

  m.def("gcd", [](const Int& a, const Int& b) { return tsing::gcd(a, b); });
  m.def("mod_inverse", &mod_inverse);
  m.def("hj_expand", &hj_expand);
  m.def("hj_evaluate", &hj_evaluate);
  m.def("conjugate_fraction", &conjugate_fraction);

  // ---- singularities ------------------------------------------------
  py::enum_<SingKind>(m, "SingKind")
      .value("Smooth", SingKind::Smooth)
      .value("DuValA", SingKind::DuValA)
      .value("DuValD", SingKind::DuValD)
      .value("DuValE", SingKind::DuValE)
      .value("TClass", SingKind::TClass)
      .value("OtherCyclic", SingKind::OtherCyclic);

  py::class_<QuotSing>(m, "QuotSing")
      .def_readonly("n", &QuotSing::n)
      .def_readonly("a", &QuotSing::a)
      .def(py::self == py::self)
      .def("__repr__", &QuotSing::str);
  m.def("make_quot_sing", &make_quot_sing);

  py::class_<SingClass>(m, "SingClass")
      .def_readonly("kind", &SingClass::kind)
      .def_readonly("r", &SingClass::r)
      .def_readonly("d", &SingClass::d)
      .def_readonly("n0", &SingClass::n0)
      .def_readonly("a0", &SingClass::a0)
      .def("quot", &SingClass::quot)
      .def("milnor", [](const SingClass& c) { return milnor_number(c); })
      .def("d_value", [](const SingClass& c) { return d_value(c); })
      .def(py::self == py::self)
      .def("__lt__",
           [](const SingClass& x, const SingClass& y) { return x < y; })
      .def("__hash__",
           [](const SingClass& c) { return py::hash(py::str(c.str())); })
      .def("__repr__", &SingClass::str);

  py::class_<ChainData>(m, "ChainData")
      .def_readonly("string", &ChainData::string)
      .def_readonly("self_intersections", &ChainData::self_intersections);
  m.def("chain_data", &chain_data);

  m.def("classify", py::overload_cast<const Int&, const Int&>(&classify));
  m.def("milnor_number", &milnor_number);
  m.def("d_value", &d_value);
  m.def("generate_t_strings", [](const Int& d, int max_len) {
    auto s = generate_t_strings(d, max_len);
    return std::vector<HJString>(s.begin(), s.end());
  });
  m.def("is_t_string", &is_t_string);
  m.def("conjugate_string", &conjugate_string);
  m.def("strings_conjugate", &strings_conjugate);
  m.def("s_string", &s_string);
  m.def("lemma_t1_check", &lemma_t1_check);
  m.def("lemma_t2_check", &lemma_t2_check);
  m.def("discrepancies", &discrepancies);
  m.def("boundary_pullback_selfint", &boundary_pullback_selfint);
  m.def("t_fibre_partitions", [](const Int& d, const Int& n, const Int& a) {
    auto s = t_fibre_partitions(d, n, a);
    return std::vector<std::vector<SingClass>>(s.begin(), s.end());
  });

  // ---- markov ---------------------------------------------------------
  py::class_<MarkovEquation>(m, "MarkovEquation")
      .def_readonly("family_id", &MarkovEquation::family_id)
      .def_readonly("coeffs", &MarkovEquation::coeffs)
      .def_readonly("lam", &MarkovEquation::lambda)
      .def_readonly("minimal_solutions", &MarkovEquation::minimal_solutions)
      .def("__repr__", &MarkovEquation::str);

  m.def("markov_equation", &markov_equation,
        py::return_value_policy::reference);
  m.def("equation_residual", &equation_residual);
  m.def("is_solution", &is_solution);
  m.def("mutate", &mutate);
  m.def("enumerate_solutions", [](int family, const Int& bound) {
    auto s = enumerate_solutions(markov_equation(family), bound);
    return std::vector<Triple>(s.begin(), s.end());
  });
  m.def("descent_step", [](int family, const Triple& t) {
    return descent_step(markov_equation(family), t);
  });

  // ---- toric ----------------------------------------------------------
  py::class_<Vec2>(m, "Vec2")
      .def_readonly("x", &Vec2::x)
      .def_readonly("y", &Vec2::y)
      .def("__repr__", &Vec2::str);

  py::class_<Fan2>(m, "Fan2")
      .def_readonly("rays", &Fan2::rays)
      .def_property_readonly("weights",
                             [](const Fan2& f) { return f.weights; })
      .def_property_readonly("e", [](const Fan2& f) {
        return f.quotient ? std::optional<Int>(f.quotient->e) : std::nullopt;
      });

  py::class_<SurfaceReport>(m, "SurfaceReport")
      .def_readonly("singularities", &SurfaceReport::singularities)
      .def_readonly("d_values", &SurfaceReport::d_values)
      .def_readonly("k2", &SurfaceReport::k2)
      .def_readonly("euler", &SurfaceReport::euler)
      .def_readonly("picard_rank", &SurfaceReport::picard_rank)
      .def_readonly("valid", &SurfaceReport::valid)
      .def_readonly("noether_ok", &SurfaceReport::noether_ok);

  m.def("cone_singularity", [](const Int& ux, const Int& uy, const Int& vx,
                               const Int& vy) {
    return cone_singularity(Vec2{ux, uy}, Vec2{vx, vy});
  });
  m.def("wps_fan", &wps_fan);
  m.def("quotient_fan", &quotient_fan);
  m.def("k_squared", &k_squared);
  m.def("fan_relation", &fan_relation);
  m.def("surface_report", &surface_report);

  // ---- classification -------------------------------------------------
  py::class_<FamilyRecord>(m, "FamilyRecord")
      .def_readonly("id", &FamilyRecord::id)
      .def_readonly("equation_family", &FamilyRecord::equation_family)
      .def_readonly("coeffs", &FamilyRecord::coeffs)
      .def_readonly("expected_k2", &FamilyRecord::expected_k2)
      .def_readonly("expected_d", &FamilyRecord::expected_d);

  py::class_<ANRow>(m, "ANRow")
      .def_readonly("an_number", &ANRow::an_number)
      .def_readonly("x_sings", &ANRow::x_sings)
      .def_readonly("y_family", &ANRow::y_family)
      .def_readonly("y_triple", &ANRow::y_triple)
      .def_readonly("y_sings", &ANRow::y_sings)
      .def_readonly("d_column", &ANRow::d_column);

  py::class_<SporadicEntry>(m, "SporadicEntry")
      .def_readonly("label", &SporadicEntry::label)
      .def_readonly("index", &SporadicEntry::index)
      .def_readonly("sings", &SporadicEntry::sings)
      .def_readonly("count", &SporadicEntry::count);

  py::class_<Tables>(m, "Tables")
      .def_readonly("families", &Tables::families)
      .def_readonly("an_rows", &Tables::an_rows)
      .def_readonly("sporadic", &Tables::sporadic)
      .def("family", &Tables::family, py::return_value_policy::reference);

  m.def("load_tables", &Tables::load);
  m.def("default_tables_path", &default_tables_path);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& c) {
        return (c.pass ? "[pass] " : "[FAIL] ") + c.name;
      });

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("checks", &VerifyReport::checks)
      .def("all_pass", &VerifyReport::all_pass)
      .def("passed", &VerifyReport::passed)
      .def("failed", &VerifyReport::failed);

  m.def("enumerate_d_triples", &enumerate_d_triples);
  m.def("build_family_fan", &build_family_fan);
  m.def("build_family_surface", &build_family_surface);
  m.def("predicted_singularities", &predicted_singularities);
  m.def("verify_theorem_toric", &verify_theorem_toric);
  m.def("verify_an_table", &verify_an_table);
  m.def("verify_d_triples", &verify_d_triples);
  m.def("verify_sporadic", &verify_sporadic);

  py::class_<LemmaSweepParams>(m, "LemmaSweepParams")
      .def(py::init<>())
      .def_readwrite("roundtrip_n", &LemmaSweepParams::roundtrip_n)
      .def_readwrite("conjugate_n", &LemmaSweepParams::conjugate_n)
      .def_readwrite("oracle_len", &LemmaSweepParams::oracle_len)
      .def_readwrite("oracle_max_entry", &LemmaSweepParams::oracle_max_entry)
      .def_readwrite("lemma_pair_n", &LemmaSweepParams::lemma_pair_n)
      .def_readwrite("lemma_t_max", &LemmaSweepParams::lemma_t_max)
      .def_readwrite("lemma_b_extra_max", &LemmaSweepParams::lemma_b_extra_max)
      .def_readwrite("fsq_len", &LemmaSweepParams::fsq_len);
  m.def("verify_lemmas", &verify_lemmas,
        py::arg("params") = LemmaSweepParams{});

  py::enum_<FibreType>(m, "FibreType")
      .value("O", FibreType::O)
      .value("I", FibreType::I)
      .value("II", FibreType::II)
      .value("Invalid", FibreType::Invalid);

  py::class_<FibreConfig>(m, "FibreConfig")
      .def(py::init([](HJString chain, std::optional<size_t> branch_at,
                       size_t branch_twos) {
             return FibreConfig{std::move(chain), branch_at, branch_twos};
           }),
           py::arg("chain"), py::arg("branch_at") = std::nullopt,
           py::arg("branch_twos") = 0)
      .def_readonly("chain", &FibreConfig::chain)
      .def("__repr__", &fibre_input_repr);
  m.def("validate_fibre", &validate_fibre);

  m.attr("__version__") = "0.1.0";
}
