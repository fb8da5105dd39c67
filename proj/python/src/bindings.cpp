#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilrank/diophantine.hpp"
#include "nilrank/report.hpp"
#include "nilrank/search.hpp"
#include "nilrank/selftest.hpp"
#include "nilrank/theorems.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {

template <>
struct type_caster<nilrank::Integer> {
  PYBIND11_TYPE_CASTER(nilrank::Integer, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    const object index = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!index) {
      PyErr_Clear();
      return false;
    }
    value = nilrank::Integer(str(index).cast<std::string>());
    return true;
  }

  static handle cast(const nilrank::Integer& src, return_value_policy, handle) {
    if (src.fits_slong_p()) return PyLong_FromLong(src.get_si());
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace nilrank;

py::object to_python(const report::Json& json) {
  return py::module_::import("json").attr("loads")(json.dump());
}

report::Json from_python(const py::object& value) {
  return report::Json::parse(py::module_::import("json").attr("dumps")(value).cast<std::string>());
}

std::string element_repr(const GroupElement& g) {
  return "GroupElement(gen_exps=" + to_string(g.gen_exps()) + ", comm_exps=" + to_string(g.comm_exps()) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free class-2 nilpotent groups, central quotients and rank-2 witnesses.";

  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("pair_count", &pair_count, py::arg("n"));
  m.def("pair_index", &pair_index, py::arg("i"), py::arg("j"), py::arg("n"),
        "0-based index of the pair (i, j), i < j, in lexicographic order.");

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<IntVec, IntVec>(), py::arg("gen_exps"), py::arg("comm_exps"))
      .def_static("identity", &GroupElement::identity, py::arg("n"))
      .def_static("generator", &GroupElement::generator, py::arg("n"), py::arg("k"))
      .def_static("from_generators", &GroupElement::from_generators, py::arg("gen_exps"))
      .def_static("central", &GroupElement::central, py::arg("n"), py::arg("comm_exps"))
      .def_property_readonly("rank", &GroupElement::rank)
      .def_property_readonly("gen_exps", &GroupElement::gen_exps)
      .def_property_readonly("comm_exps", &GroupElement::comm_exps)
      .def("is_identity", &GroupElement::is_identity)
      .def("__mul__", [](const GroupElement& u, const GroupElement& v) { return mul(u, v); })
      .def("__pow__", [](const GroupElement& u, const Integer& k) { return nilrank::pow(u, k); })
      .def("__invert__", [](const GroupElement& u) { return inv(u); })
      .def("__eq__", [](const GroupElement& u, const GroupElement& v) { return u == v; })
      .def("__hash__", [](const GroupElement& g) { return py::hash(py::str(element_repr(g))); })
      .def("__repr__", &element_repr);

  py::class_<CyclicCentralSubgroup>(m, "CyclicCentralSubgroup")
      .def(py::init<std::size_t, IntVec>(), py::arg("n"), py::arg("exponents"))
      .def_property_readonly("rank", &CyclicCentralSubgroup::rank)
      .def_property_readonly("exponents", &CyclicCentralSubgroup::exponents)
      .def("at", &CyclicCentralSubgroup::at, py::arg("i"), py::arg("j"))
      .def("all_nonzero", &CyclicCentralSubgroup::all_nonzero)
      .def("generator", &CyclicCentralSubgroup::generator)
      .def("__repr__", [](const CyclicCentralSubgroup& c) {
        return "CyclicCentralSubgroup(n=" + std::to_string(c.rank()) + ", exponents=" + to_string(c.exponents()) +
               ")";
      });

  m.def("identity", &identity, py::arg("n"));
  m.def("mul", &mul, py::arg("u"), py::arg("v"));
  m.def("inv", &inv, py::arg("u"));
  m.def("pow", [](const GroupElement& u, const Integer& k) { return nilrank::pow(u, k); }, py::arg("u"), py::arg("k"));
  m.def("commutator", &commutator, py::arg("u"), py::arg("v"));
  m.def("commutator_exponents", &commutator_exponents, py::arg("u"), py::arg("v"));
  m.def("membership_in_c", &membership_in_C, py::arg("g"), py::arg("subgroup"),
        "l with g = z^l for z the generator of the subgroup, or None.");
  m.def("is_central_mod_c", &is_central_mod_C, py::arg("g"), py::arg("subgroup"));

  m.def("gcd_many", [](const IntVec& values) { return gcd_many(values); }, py::arg("values"));

  py::class_<DiophantineSolution>(m, "DiophantineSolution")
      .def_readonly("x", &DiophantineSolution::x)
      .def_readonly("y", &DiophantineSolution::y)
      .def("__eq__", [](const DiophantineSolution& a, const DiophantineSolution& b) { return a == b; })
      .def("__repr__", [](const DiophantineSolution& s) {
        return "DiophantineSolution(x=" + s.x.get_str() + ", y=" + s.y.get_str() + ")";
      });
  m.def("solve_linear_2var", &solve_linear_2var, py::arg("p"), py::arg("q"), py::arg("r"),
        "Solution of p x + q y = r with y reduced into [0, |p/g|), or None.");

  py::class_<KernelReport>(m, "KernelReport")
      .def_readonly("kernel_rank", &KernelReport::kernel_rank)
      .def_readonly("basis", &KernelReport::basis);
  m.def("kernel_rank", &kernel_rank, py::arg("alpha1"), py::arg("alpha2"), py::arg("subgroup"));

  py::class_<WitnessPair>(m, "WitnessPair")
      .def_readonly("subgroup", &WitnessPair::subgroup)
      .def_readonly("alpha1", &WitnessPair::alpha1)
      .def_readonly("alpha2", &WitnessPair::alpha2)
      .def_readonly("l", &WitnessPair::l)
      .def_readonly("kernel", &WitnessPair::kernel)
      .def("to_dict", [](const WitnessPair& w) { return to_python(report::witness(w)); });

  py::class_<TheoremAResult>(m, "ConstructionResult")
      .def_readonly("witness", &TheoremAResult::witness)
      .def_readonly("diophantine", &TheoremAResult::diophantine);
  m.def("rank3_subgroup", &rank3_subgroup, py::arg("a1"), py::arg("a2"), py::arg("a3"));
  m.def("theorem_a_construct", &theorem_a_construct, py::arg("a1"), py::arg("a2"), py::arg("a3"),
        "Explicit rank-2 witness for F_3 / <[x1,x2]^a1 [x2,x3]^a2 [x1,x3]^a3>.");

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("quadruple", &ConditionReport::quadruple)
      .def_readonly("lhs_term", &ConditionReport::lhs_term)
      .def_readonly("rhs_term", &ConditionReport::rhs_term)
      .def_readonly("epsilon", &ConditionReport::epsilon)
      .def_readonly("holds", &ConditionReport::holds)
      .def_readonly("pfaffian", &ConditionReport::pfaffian);
  m.def("theorem_b_condition", [](const IntVec& a) { return theorem_b_condition(a); }, py::arg("a"),
        "Four-index condition on (a12, a13, a14, a23, a24, a34).");
  m.def("det_a", [](const IntVec& a) { return det_A(a); }, py::arg("a"));
  m.def("pfaffian4", [](const IntVec& a) { return pfaffian4(a); }, py::arg("a"));

  py::class_<ConditionCheck>(m, "ConditionCheck")
      .def_readonly("reports", &ConditionCheck::reports)
      .def_readonly("all_hold", &ConditionCheck::all_hold);
  m.def("theorem_c_check", [](std::size_t n, const IntVec& a) { return theorem_c_check(n, a); }, py::arg("n"),
        py::arg("a"));

  m.def("search_space_size",
        [](const CyclicCentralSubgroup& c, std::int64_t bound) { return search_space_size(SearchSpec{c, bound}); },
        py::arg("subgroup"), py::arg("bound"));
  m.def(
      "brute_force_witness_search",
      [](const CyclicCentralSubgroup& c, std::int64_t bound, bool require_rank2, bool allow_trivial_l,
         unsigned threads) {
        SearchOptions options;
        options.threads = threads;
        const py::gil_scoped_release release;
        return brute_force_witness_search(SearchSpec{c, bound, require_rank2, allow_trivial_l}, options);
      },
      py::arg("subgroup"), py::arg("bound"), py::arg("require_rank2") = true, py::arg("allow_trivial_l") = false,
      py::arg("threads") = 0,
      "Lexicographically first pair in [-bound, bound]^n whose commutator lies in the subgroup, or None.");

  m.def(
      "soundness_sweep",
      [](std::size_t n, std::int64_t bound, std::uint64_t trials, std::uint64_t seed, std::vector<IntVec> injected,
         unsigned threads) {
        SweepConfig config;
        config.n = n;
        config.bound = bound;
        config.trials = trials;
        config.seed = seed;
        config.injected = std::move(injected);
        config.threads = threads;
        SweepReport result;
        {
          const py::gil_scoped_release release;
          result = soundness_sweep(config);
        }
        return to_python(report::sweep(result));
      },
      py::arg("n") = 4, py::arg("bound") = 2, py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("injected") = std::vector<IntVec>{}, py::arg("threads") = 0);

  m.def(
      "verify_witness",
      [](const py::object& document) {
        py::dict out;
        for (const auto& check : report::verify_witness(from_python(document))) out[py::str(check.field)] = check.ok;
        return out;
      },
      py::arg("document"), "Re-derives each recorded field; maps field name to whether it matched.");

  m.def(
      "selftest",
      [](std::uint64_t trials, std::uint64_t seed) {
        SelftestReport result;
        {
          const py::gil_scoped_release release;
          result = run_selftest(trials, seed);
        }
        return result.passed;
      },
      py::arg("trials") = 50, py::arg("seed") = 1);
}
