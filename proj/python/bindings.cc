#include <tclique/bounds.hh>
#include <tclique/canonical.hh>
#include <tclique/chi.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>
#include <tclique/lemma_suite.hh>
#include <tclique/omega.hh>
#include <tclique/trn_io.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tclique;

namespace
{
    auto omega_options(int exact_limit, long budget) -> OmegaOptions
    {
        OmegaOptions o;
        o.exact_limit = exact_limit;
        o.budget = budget;
        return o;
    }

    auto bound_dict(const BoundExpr & e) -> py::dict
    {
        py::dict d;
        d["value"] = e->value.value.str();
        d["kind"] = e->value.kind_name();
        d["trace_nodes"] = trace_size(e);
        d["consistent"] = trace_consistent(e);
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Tournament clique numbers, dichromatic numbers and the bounds recurrences";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    py::class_<Tournament>(m, "Tournament")
        .def(py::init([](const std::vector<std::vector<int>> & rows) { return from_matrix(static_cast<int>(rows.size()), rows); }),
            py::arg("matrix"))
        .def_static("parse", &parse_trn, py::arg("text"))
        .def("__len__", &Tournament::size)
        .def("arc", &Tournament::arc, py::arg("u"), py::arg("v"))
        .def("out", [](const Tournament & t, Vertex v) { return t.out(v).members(); }, py::arg("v"))
        .def("matrix", &to_matrix)
        .def("reversed", &Tournament::reversed)
        .def("trn", &format_trn)
        .def("__eq__", [](const Tournament & a, const Tournament & b) { return a == b; })
        .def("__repr__", [](const Tournament & t) { return "<Tournament n=" + std::to_string(t.size()) + ">"; });

    m.def("transitive", &transitive_tournament, py::arg("n"));
    m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
    m.def("build", [](const std::string & family, int n) {
        auto lt = build_family({family_from_string(family), n});
        return py::make_tuple(lt.tournament, lt.labels);
    }, py::arg("family"), py::arg("n"));

    m.def("omega", [](const Tournament & t, int exact_limit, long budget) {
        auto r = omega_dir(t, omega_options(exact_limit, budget));
        py::dict d;
        d["status"] = to_string(r.status);
        d["value"] = r.value;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["order"] = r.order;
        return d;
    }, py::arg("t"), py::arg("exact_limit") = 14, py::arg("budget") = -1);

    m.def("chi", [](const Tournament & t, int exact_limit, long budget) {
        ChiOptions o;
        o.exact_limit = exact_limit;
        o.budget = budget;
        auto r = chi_dir(t, o);
        py::dict d;
        d["status"] = to_string(r.status);
        d["value"] = r.value;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        std::vector<std::vector<Vertex>> classes;
        for (auto & c : r.classes)
            classes.push_back(c.members());
        d["classes"] = classes;
        return d;
    }, py::arg("t"), py::arg("exact_limit") = 20, py::arg("budget") = -1);

    m.def("contains", [](const Tournament & host, const Tournament & pattern, long budget) {
        ContainmentOptions o;
        o.budget = budget;
        return contains_copy(host, pattern, o);
    }, py::arg("host"), py::arg("pattern"), py::arg("budget") = -1);

    m.def("canonical_code", [](const Tournament & t) { return to_hex(canonical_code(t)); }, py::arg("t"));
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));

    m.def("f_main", [](int t) { return bound_dict(f_main(t)); }, py::arg("t"));
    m.def("ramsey_upper", [](long s, long t) { return bound_dict(ramsey_upper(s, t)); }, py::arg("s"), py::arg("t"));

    m.def("lemma_suite", [](std::uint64_t seed, int max_n, double scale) {
        return to_json(run_lemma_suite({.seed = seed, .max_n = max_n, .scale = scale})).dump();
    }, py::arg("seed") = 1, py::arg("max_n") = 10, py::arg("scale") = 1.0);
}
