#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidlab/acceptance.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/io.hpp"
#include "braidlab/nichols.hpp"
#include "braidlab/repcat.hpp"
#include "braidlab/singlet.hpp"
#include "braidlab/yd.hpp"

namespace py = pybind11;
using namespace braidlab;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact computations for Nichols algebras, quantum groups and singlet fusion";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<CheckFailure>(m, "CheckFailure", PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Rational>(m, "Rational")
        .def(py::init(&Rational::parse))
        .def(py::init<int64_t, int64_t>())
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self);

    py::class_<CycNum>(m, "CycNum")
        .def(py::init([](int64_t v) { return CycNum(v); }))
        .def(py::init([](const std::string& s) { return parse_cyc(s); }))
        .def_static("root_of_unity", &CycNum::root_of_unity, py::arg("n"), py::arg("k") = 1)
        .def("__str__", &CycNum::str)
        .def("__repr__", [](const CycNum& c) { return "CycNum('" + c.str() + "')"; })
        .def("__complex__", &CycNum::numeric)
        .def("is_zero", &CycNum::is_zero)
        .def("is_one", &CycNum::is_one)
        .def("inv", &CycNum::inv)
        .def("pow", &CycNum::pow)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self);

    m.def("gauss_binomial", &gauss_binomial, py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("q_factorial", &q_factorial, py::arg("n"), py::arg("q"));

    m.def(
        "nichols_hilbert",
        [](const std::string& braiding_json, int max_degree) {
            return nichols_dimensions(braid_matrix_from_json(braiding_json), max_degree, NicholsConfig{max_degree, 5000})
                .hilbert;
        },
        py::arg("braiding_json"), py::arg("max_degree") = 8, "Hilbert series from a braiding JSON document");
    m.def(
        "rank1_hilbert",
        [](int64_t p, int max_degree) {
            return nichols_dimensions(braid_matrix(preset_rank1(p)), max_degree, NicholsConfig{max_degree, 5000}).hilbert;
        },
        py::arg("p"), py::arg("max_degree") = 8);
    m.def(
        "total_dimension",
        [](const std::string& braiding_json, int bound) {
            return total_dimension(braid_matrix_from_json(braiding_json), bound, NicholsConfig{bound, 5000}).str();
        },
        py::arg("braiding_json"), py::arg("bound") = 8);

    m.def(
        "fusion_json",
        [](int64_t p, const std::string& a, const std::string& b) {
            return braidlab::fusion_json(fuse(parse_label(a, p), parse_label(b, p), p));
        },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "tensor_decomposition",
        [](int64_t p, const std::string& a, const std::string& b) {
            std::map<std::string, int> out;
            auto t = tensor(module_of(parse_label(a, p), p), module_of(parse_label(b, p), p));
            for (const auto& [l, n] : decompose(t)) out[l.str()] = n;
            return out;
        },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "check_ring_laws", [](int64_t p, int64_t window) { return braidlab::check_ring_laws(p, window).ok; },
        py::arg("p"), py::arg("window") = 1);

    m.def(
        "discriminant",
        [](const std::string& lattice_json) {
            auto df = discriminant_form(lattice_from_json(lattice_json));
            std::vector<std::string> q;
            for (const auto& e : df.group.elements()) q.push_back(df.Q(e).root_str());
            return std::make_pair(df.group.str(), q);
        },
        py::arg("lattice_json"), "(group, Q values) of the discriminant form");
    m.def("triplet_lattice_json", [](int64_t p) { return lattice_to_json(triplet_lattice(p)); }, py::arg("p"));
    m.def(
        "is_local",
        [](const std::string& lattice_json, const std::vector<std::string>& lambda) {
            RatVec v;
            for (const auto& s : lambda) v.push_back(Rational::parse(s));
            return is_local_over(lattice_from_json(lattice_json), v);
        },
        py::arg("lattice_json"), py::arg("lam"));

    m.def("uproll_triplet_json", [](int64_t p) { return uproll_json(uproll_triplet(p)); }, py::arg("p"));
    m.def(
        "uproll_gl11_json", [](const std::string& hbar) { return uproll_json(uproll_gl11(Rational::parse(hbar))); },
        py::arg("hbar") = "1/2");
    m.def(
        "uproll_json",
        [](const std::string& braiding_json, const std::string& lattice_json) {
            return braidlab::uproll_json(
                uproll(braided_object_from_json(braiding_json), lattice_from_json(lattice_json)));
        },
        py::arg("braiding_json"), py::arg("lattice_json"));
    m.def("uproll_rejected_example", &uproll_rejected_example, py::arg("p"));
    m.def("linking_from_yd", [](int64_t p) { return braidlab::linking_from_yd(p).ok; }, py::arg("p"));
    m.def(
        "yd_check_json", [](const std::string& module_json) { return yd_check(yd_module_from_json(module_json)).ok; },
        py::arg("module_json"));
    m.def("verma_yd_json", [](int64_t p) { return yd_module_to_json(verma_yd(preset_rank1(p))); }, py::arg("p"));

    m.def(
        "acceptance_json",
        [](bool determinism, uint64_t seed) {
            AcceptanceOptions opt;
            opt.determinism = determinism;
            opt.seed = seed;
            py::gil_scoped_release release;
            return braidlab::acceptance_json(run_acceptance(opt));
        },
        py::arg("determinism") = false, py::arg("seed") = 12345);
}
