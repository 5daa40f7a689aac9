#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "faithdim/bch.hpp"
#include "faithdim/classifier.hpp"
#include "faithdim/io.hpp"
#include "faithdim/selftest.hpp"

#include <sstream>

namespace py = pybind11;
using namespace faithdim;

namespace {

EngineOptions make_options(std::uint64_t budget, std::uint64_t seed,
                           unsigned threads) {
  EngineOptions opt;
  opt.budget = budget;
  opt.seed = seed;
  opt.threads = threads;
  return opt;
}

py::dict result_dict(const FaithfulDimResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["signature"] = r.signature;
  d["witness"] = r.witness;
  d["mode"] = r.exact ? "exact" : "upper-bound";
  d["q"] = r.q;
  d["f"] = r.f;
  d["l1"] = r.l1;
  d["l2"] = r.l2;
  d["m"] = r.m;
  return d;
}

py::list report_list(const SweepReport& rep) {
  py::list rows;
  for (const auto& r : rep.rows) {
    py::dict d;
    d["prime"] = r.p;
    d["f"] = r.f;
    d["q"] = r.q;
    if (r.computed) {
      d["value"] = r.value;
      d["signature"] = r.signature;
      d["mode"] = r.exact ? "exact" : "upper-bound";
    } else {
      d["mode"] = "refused";
    }
    d["matched_case"] = r.matched;
    rows.append(std::move(d));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(faithdim, m) {
  m.doc() = "exact faithful-dimension computations for nilpotent Z-Lie "
            "algebras over finite fields";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<refusal>(m, "Refusal", PyExc_RuntimeError);

  py::class_<ZLieAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &ZLieAlgebra::dim)
      .def_property_readonly("basis", &ZLieAlgebra::basis_names)
      .def("validate",
           [](const ZLieAlgebra& g) {
             auto r = validate(g);
             return py::make_tuple(r.ok, r.message);
           })
      .def("nilpotency_class",
           [](const ZLieAlgebra& g) { return nilpotency_class(g); })
      .def("center_rank",
           [](const ZLieAlgebra& g) { return center(g).rows(); })
      .def("bad_prime_bound",
           [](const ZLieAlgebra& g) { return bad_prime_bound(g); })
      .def("to_json", [](const ZLieAlgebra& g) { return algebra_to_json(g); })
      .def("__repr__", [](const ZLieAlgebra& g) {
        std::ostringstream os;
        os << "<faithdim.Algebra dim=" << g.dim() << ">";
        return os.str();
      });

  m.def("example", &example_algebra, py::arg("name"),
        "built-in algebra: binary_quadratic, binary_cubic, lee, elliptic:a, "
        "heisenberg:k, unitriangular:k, abelian:k, companion:c0,c1,...,1");
  m.def("from_json", &algebra_from_json, py::arg("text"));
  m.def("load", &load_algebra, py::arg("path"));
  m.def(
      "pattern",
      [](unsigned n, const std::vector<std::pair<unsigned, unsigned>>& rel) {
        return pattern_algebra(Poset(n, rel));
      },
      py::arg("n"), py::arg("relations"),
      "pattern algebra of the poset on [n] generated by the given i < j "
      "relations");
  m.def("free_nilpotent", &free_nilpotent, py::arg("n"), py::arg("c"));
  m.def("free_metabelian", &free_metabelian_2, py::arg("c"));

  m.def(
      "compute",
      [](const ZLieAlgebra& g, std::uint32_t p, unsigned f,
         std::uint64_t budget, std::uint64_t seed, unsigned threads) {
        return result_dict(
            faithful_dimension(g, p, f, make_options(budget, seed, threads)));
      },
      py::arg("algebra"), py::arg("p"), py::arg("f") = 1,
      py::arg("budget") = 100000000ull, py::arg("seed") = 0,
      py::arg("threads") = 0,
      "faithful dimension of exp(algebra (x) F_{p^f})");

  m.def(
      "oracle_min",
      [](const ZLieAlgebra& g, std::uint32_t p, unsigned f,
         std::uint64_t budget) {
        AdaptedBasis b = adapted_basis(g);
        LinearFormMatrix F = commutator_matrix(g, b);
        EngineOptions opt;
        opt.budget = budget;
        if (f == 1)
          return exhaustive_min(F, PrimeField(p), b.l1, b.l2(), 1, opt);
        return exhaustive_min(F, make_extension_field(p, f), b.l1, b.l2(), f,
                              opt);
      },
      py::arg("algebra"), py::arg("p"), py::arg("f") = 1,
      py::arg("budget") = 2000000ull,
      "independent branch-and-bound oracle for small instances");

  m.def(
      "predicted_value",
      [](const std::string& name, std::uint32_t p,
         unsigned f) -> py::object {
        auto v = predicted_value(name, p, f);
        if (!v) return py::none();
        return py::cast(*v);
      },
      py::arg("name"), py::arg("p"), py::arg("f") = 1);

  m.def(
      "sweep",
      [](const ZLieAlgebra& g, std::uint32_t lo, std::uint32_t hi, unsigned f,
         const std::string& name, std::uint64_t budget) {
        EngineOptions opt;
        opt.budget = budget;
        return report_list(sweep(g, lo, hi, f, opt, name));
      },
      py::arg("algebra"), py::arg("lo"), py::arg("hi"), py::arg("f") = 1,
      py::arg("name") = "", py::arg("budget") = 100000000ull);

  m.def(
      "vertical_sweep",
      [](const ZLieAlgebra& g, std::uint32_t p, unsigned flo, unsigned fhi,
         const std::string& name, std::uint64_t budget) {
        EngineOptions opt;
        opt.budget = budget;
        return report_list(vertical_sweep(g, p, flo, fhi, opt, name));
      },
      py::arg("algebra"), py::arg("p"), py::arg("flo"), py::arg("fhi"),
      py::arg("name") = "", py::arg("budget") = 100000000ull);

  m.def(
      "orbit_census",
      [](const ZLieAlgebra& g, std::uint32_t p, std::uint64_t budget) {
        AdaptedBasis b = adapted_basis(g);
        LinearFormMatrix F = commutator_matrix(g, b);
        CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
        return orbit_census(F, PrimeField(p), dims, budget);
      },
      py::arg("algebra"), py::arg("p"), py::arg("budget") = 10000000ull,
      "irreducible-dimension histogram of exp(algebra (x) F_p)");

  m.def("pattern_prediction",
        [](unsigned n, const std::vector<std::pair<unsigned, unsigned>>& rel,
           std::uint32_t p, unsigned f) {
          return pattern_prediction(Poset(n, rel), p, f);
        },
        py::arg("n"), py::arg("relations"), py::arg("p"), py::arg("f") = 1);

  m.def("witt", &witt, py::arg("n"), py::arg("c"));
  m.def("legendre_symbol", &legendre_symbol, py::arg("a"), py::arg("p"));
  m.def("represented_by_form", &represented_by_form, py::arg("p"),
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "count_roots",
      [](const std::vector<std::int64_t>& coeffs, std::uint32_t p,
         unsigned f) {
        if (f == 1) return count_roots(coeffs, PrimeField(p));
        return count_roots(coeffs, make_extension_field(p, f));
      },
      py::arg("coeffs"), py::arg("p"), py::arg("f") = 1,
      "distinct roots in F_{p^f}; coefficients constant term first");

  m.def(
      "selftest",
      [](std::uint64_t budget, unsigned threads) {
        std::ostringstream log;
        EngineOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        int rc = selftest_main(opt, log);
        return py::make_tuple(rc == 0, log.str());
      },
      py::arg("budget") = 100000000ull, py::arg("threads") = 0,
      "run the acceptance suite; returns (ok, log)");
}
