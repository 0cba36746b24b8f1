#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuntz/endomorphism.hpp"
#include "cuntz/izumi.hpp"
#include "cuntz/json_io.hpp"
#include "cuntz/masa.hpp"

namespace py = pybind11;
using namespace cuntz;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Endomorphisms of the Cuntz algebra O_n: word calculus, diagonal "
              "invariance decision, rotated-diagonal scans";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<value_error>(m, "ValueError_", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<AlgebraElement>(m, "Element")
        .def(py::init<int>(), py::arg("n"))
        .def_static("identity", &AlgebraElement::identity)
        .def_static("word", &AlgebraElement::word, py::arg("n"), py::arg("alpha"),
                    py::arg("beta"), py::arg("c") = Complex(1.0))
        .def_property_readonly("n", &AlgebraElement::n)
        .def("add_term", &AlgebraElement::add_term, py::arg("alpha"),
             py::arg("beta"), py::arg("c"), py::return_value_policy::reference)
        .def("adjoint", &AlgebraElement::adjoint)
        .def("coefficient", &AlgebraElement::coefficient)
        .def("term_count", &AlgebraElement::term_count)
        .def("gauge_degrees", &AlgebraElement::gauge_degrees)
        .def("terms",
             [](const AlgebraElement& x) {
                 py::list out;
                 for (const auto& [key, c] : x.terms()) {
                     out.append(py::make_tuple(key.first, key.second, c));
                 }
                 return out;
             })
        .def("__add__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__mul__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a * b; })
        .def("__mul__",
             [](const AlgebraElement& a, Complex c) { return a * c; })
        .def("__rmul__",
             [](const AlgebraElement& a, Complex c) { return c * a; })
        .def("__neg__", [](const AlgebraElement& a) { return -a; })
        .def("to_json",
             [](const AlgebraElement& x) { return element_to_json(x).dump(); })
        .def_static("from_json", [](const std::string& s) {
            return element_from_json(json::parse(s));
        });

    m.def("phi", &phi, py::arg("x"), py::arg("power") = 1);
    m.def("u_tower",
          [](const AlgebraElement& u, int k) { return u_tower(u, k); },
          py::arg("u"), py::arg("k"));
    m.def("equals_within", &equals_within, py::arg("x"), py::arg("y"),
          py::arg("eps") = kDefaultEps);
    m.def("max_coeff_difference", &max_coeff_difference);
    m.def("gauge_act", &gauge_act);
    m.def("f_level", &f_level);

    m.def("is_unitary",
          [](const AlgebraElement& x, int k, double eps) {
              return is_unitary(x, k, eps);
          },
          py::arg("x"), py::arg("k"), py::arg("eps") = kDefaultEps);
    m.def("is_monomial", &is_monomial, py::arg("x"), py::arg("k"),
          py::arg("eps") = kDefaultEps);
    m.def("is_diagonal", &is_diagonal, py::arg("x"), py::arg("eps") = kDefaultEps);

    m.def("lambda_apply", &lambda_apply, py::arg("u"), py::arg("x"));
    m.def("compose_endos", &compose_endos);
    m.def("weyl_commutes",
          [](const AlgebraElement& u, int k, double eps) {
              auto r = weyl_commutation_test(u, k, eps);
              return py::make_tuple(r.commutes, r.residual);
          },
          py::arg("u"), py::arg("k"), py::arg("eps") = kDefaultEps);

    py::class_<DecisionReport>(m, "DecisionReport")
        .def_readonly("n", &DecisionReport::n)
        .def_readonly("k", &DecisionReport::k)
        .def_readonly("preserves_diagonal", &DecisionReport::preserves_diagonal)
        .def_readonly("R", &DecisionReport::R)
        .def_readonly("subspace_dims", &DecisionReport::subspace_dims)
        .def_readonly("witness", &DecisionReport::witness)
        .def_readonly("eps", &DecisionReport::eps)
        .def("to_json",
             [](const DecisionReport& r) { return decision_report_to_json(r).dump(); });

    m.def("decide_diagonal_invariance", &decide_diagonal_invariance, py::arg("w"),
          py::arg("k"), py::arg("eps") = kDefaultEps);
    m.def("oracle_direct_check", &oracle_direct_check, py::arg("w"), py::arg("k"),
          py::arg("depth"), py::arg("eps") = kDefaultEps);
    m.def("sufficient_cor42", &sufficient_cor42, py::arg("w"), py::arg("k"),
          py::arg("eps") = kDefaultEps);
    m.def("sufficient_prop45", &sufficient_prop45, py::arg("w"), py::arg("k"),
          py::arg("eps") = kDefaultEps);
    m.def("conjugate_by_bogolyubov", &conjugate_by_bogolyubov, py::arg("u"),
          py::arg("z"));
    m.def("standard_masa_invariance", &standard_masa_invariance, py::arg("u"),
          py::arg("z"), py::arg("eps") = kDefaultEps);
    m.def("masa_equal", &masa_equal, py::arg("w"), py::arg("z"),
          py::arg("eps") = kDefaultEps);

    m.def("izumi_unitary", [](const std::string& spec) {
        return izumi_unitary(FiniteAbelianGroup::parse(spec));
    });
    m.def("izumi_beta", [](const std::string& spec) {
        return izumi_beta(FiniteAbelianGroup::parse(spec));
    });
    m.def("verify_izumi", [](const std::string& spec, double eps) {
        auto report = verify_izumi_identities(FiniteAbelianGroup::parse(spec), eps);
        py::list checks;
        for (const auto& c : report.checks) {
            checks.append(py::make_tuple(c.name, c.ok, c.residual));
        }
        return py::make_tuple(report.all_ok, checks);
    }, py::arg("spec"), py::arg("eps") = kDefaultEps);
}
