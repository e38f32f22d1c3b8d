#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torclus/groth.hpp"
#include "torclus/seedio.hpp"

namespace py = pybind11;
using namespace torclus;

namespace {

BackendPtr cartan_backend(const std::string& type, const std::string& quotient) {
    return make_cartan_backend(make_cartan(type), parse_quotient(quotient));
}

std::vector<std::vector<std::string>> q_text(const QMatrix& Q) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : Q) {
        out.emplace_back();
        for (const auto& m : row) out.back().push_back(m.str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_torclus, m) {
    m.doc() = "Toroidal cluster algebras and Grothendieck rings";

    py::register_exception<Error>(m, "TorclusError", PyExc_ValueError);

    m.def("ctilde", [](const std::string& type, int i, int j, int64_t mm) { return make_cartan(type)->ctilde(i, j, mm); },
          py::arg("type"), py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("n_product", [](const std::string& type, int i, int64_t p, int j, int64_t s) {
        return ParamMonomial(n_sequence(*make_cartan(type), i, p, j, s)).str();
    }, "prod_a t_a^{N_a(i,p;j,s)} as text", py::arg("type"), py::arg("i"), py::arg("p"), py::arg("j"), py::arg("s"));
    m.def("star", [](const std::vector<std::string>& exprs, const std::string& type, const std::string& quotient) {
        const BackendPtr b = cartan_backend(type, quotient);
        TorusElement out = TorusElement::one(b);
        for (const auto& e : exprs) out = star(out, parse_element(b, e));
        return out.str();
    }, "Ordered product of expressions", py::arg("exprs"), py::arg("type") = "A1", py::arg("quotient") = "none");
    m.def("fundamental_class", [](const std::string& type, int i, int64_t r, const std::string& quotient) {
        return fundamental_class_thin(cartan_backend(type, quotient), i, r).str();
    }, py::arg("type"), py::arg("i"), py::arg("r"), py::arg("quotient") = "none");

    py::class_<ToroidalSeed>(m, "Seed")
        .def_static("from_json", &seed_from_json)
        .def("to_json", &seed_to_json)
        .def_property_readonly("variables", [](const ToroidalSeed& s) {
            std::vector<std::string> out;
            for (const auto& v : s.vars) out.push_back(v.str());
            return out;
        })
        .def_readonly("B", &ToroidalSeed::B)
        .def_readonly("exchangeable", &ToroidalSeed::m)
        .def_property_readonly("Q", [](const ToroidalSeed& s) { return q_text(s.Q); })
        .def("mutate", [](const ToroidalSeed& s, int k) {
            if (k < 1 || k > s.m) throw py::index_error("direction out of range");
            return mutate_seed(s, k - 1);
        }, "Mutation in direction k (1-based)")
        .def("compatible", [](const ToroidalSeed& s) { return check_compatibility(s).ok; })
        .def("exchange_graph", [](const ToroidalSeed& s, size_t max_nodes) { return exchange_graph(s, max_nodes).summary(); },
             py::arg("max_nodes") = 2000);

    m.def("verify_ids", &verify_ids);
    m.def("verify", [](const std::string& id) {
        const Report r = run_verify(id);
        return py::make_tuple(r.ok(), r.text());
    }, "Run a golden identity check; returns (ok, report text)");
}
