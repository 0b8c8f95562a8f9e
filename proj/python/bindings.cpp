#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>
#include <random>
#include <sstream>

#include "bernstein/bernstein.hpp"
#include "bernstein/json_io.hpp"

namespace py = pybind11;
using namespace bernstein;

namespace {

// Structured results cross the boundary as plain dicts and lists.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DiffMode mode_of(const std::string& s) { return diff_mode_from_string(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form uncertainty checks for band-limited functions given by integer samples";

    py::register_exception<InadmissibleFunction>(m, "InadmissibleFunction", PyExc_ValueError);
    py::register_exception<ZeroFunction>(m, "ZeroFunction", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<AllStartsDegenerate>(m, "AllStartsDegenerate", PyExc_RuntimeError);
    py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_AssertionError);

    py::class_<CoeffVec>(m, "CoeffVec")
        .def(py::init<>())
        .def(py::init<long, std::vector<cplx>>(), py::arg("n_min"), py::arg("coeffs"))
        .def_property_readonly("n_min", &CoeffVec::n_min)
        .def_property_readonly("n_max", &CoeffVec::n_max)
        .def_property_readonly("coeffs",
                               [](const CoeffVec& f) { return std::vector<cplx>(f.coeffs().begin(), f.coeffs().end()); })
        .def_property_readonly("radius", &CoeffVec::radius)
        .def("is_zero", &CoeffVec::is_zero)
        .def("shifted", &CoeffVec::shifted, py::arg("k"))
        .def("__len__", &CoeffVec::size)
        .def("__getitem__", [](const CoeffVec& f, long n) { return f[n]; })
        .def("__add__", &CoeffVec::operator+)
        .def("__sub__", &CoeffVec::operator-)
        .def("__mul__", &CoeffVec::operator*)
        .def("__rmul__", &CoeffVec::operator*)
        .def("__eq__", [](const CoeffVec& a, const CoeffVec& b) { return a == b; })
        .def("to_json", [](const CoeffVec& f) { return to_json(f).dump(); })
        .def_static("from_json", [](const std::string& s) { return coeff_vec_from_json(json::parse(s)); })
        .def("__repr__", [](const CoeffVec& f) {
            std::ostringstream os;
            os << "CoeffVec(n_min=" << f.n_min() << ", size=" << f.size() << ")";
            return os.str();
        });

    m.def("inner", &inner);
    m.def("norm", &norm);
    m.def("norm_sq", &norm_sq);
    m.def("evaluate", &evaluate, py::arg("f"), py::arg("x"));
    m.def("shifted_inner", &shifted_inner, py::arg("f"), py::arg("g"), py::arg("delta"));
    m.def("alternating_sum", &alternating_sum);
    m.def("is_admissible", &is_admissible, py::arg("f"), py::arg("tol") = 1e-10);
    m.def(
        "random_coeffs",
        [](std::uint64_t seed, int dim, bool admissible) {
            std::mt19937_64 rng(seed);
            return random_coeffs(rng, dim, admissible);
        },
        py::arg("seed"), py::arg("dim"), py::arg("admissible") = true);

    const auto none = py::none();
    auto report = [](const InequalityReport& r) { return to_py(to_json(r)); };
    m.def(
        "check_backward_up",
        [=](const CoeffVec& f, double d, std::optional<cplx> a, std::optional<cplx> b) {
            return report(check_backward_up(f, d, a, b));
        },
        py::arg("f"), py::arg("delta"), py::arg("a") = none, py::arg("b") = none);
    m.def(
        "check_central_up",
        [=](const CoeffVec& f, double d, std::optional<cplx> a, std::optional<cplx> b) {
            return report(check_central_up(f, d, a, b));
        },
        py::arg("f"), py::arg("delta"), py::arg("a") = none, py::arg("b") = none);
    m.def(
        "check_breitenberger_sequence",
        [=](const CoeffVec& f, std::optional<cplx> a, std::optional<cplx> b) {
            return report(check_breitenberger_sequence(f, a, b));
        },
        py::arg("f"), py::arg("a") = none, py::arg("b") = none);
    m.def(
        "check_heisenberg",
        [=](const CoeffVec& f, std::optional<cplx> a, std::optional<cplx> b) { return report(check_heisenberg(f, a, b)); },
        py::arg("f"), py::arg("a") = none, py::arg("b") = none);
    m.def(
        "check_sine_circle",
        [=](const CoeffVec& f, std::optional<cplx> a, std::optional<cplx> b) { return report(check_sine_circle(f, a, b)); },
        py::arg("f"), py::arg("a") = none, py::arg("b") = none);
    m.def(
        "check_localization",
        [=](const CoeffVec& f, std::optional<cplx> a, double r) { return report(check_localization(f, a, r)); },
        py::arg("f"), py::arg("a") = none, py::arg("band_limit") = std::numbers::pi);
    m.def(
        "check_bernstein", [=](const CoeffVec& f, double r) { return report(check_bernstein(f, r)); }, py::arg("f"),
        py::arg("band_limit") = std::numbers::pi);

    m.def(
        "delta_sweep_csv",
        [](const CoeffVec& f, std::vector<double> deltas, const std::string& mode) {
            return sweep_to_csv(delta_sweep(f, deltas, mode_of(mode)));
        },
        py::arg("f"), py::arg("deltas") = default_delta_grid(), py::arg("mode") = "backward");
    m.def(
        "convergence_rate",
        [](const CoeffVec& f, std::vector<double> grid, const std::string& mode) {
            return convergence_rate(f, grid, mode_of(mode));
        },
        py::arg("f"), py::arg("delta_grid"), py::arg("mode") = "backward");
    m.def(
        "commutator_limit_check",
        [](const CoeffVec& f, std::vector<double> grid) {
            std::vector<std::pair<double, double>> out;
            for (const auto& r : commutator_limit_check(f, grid)) out.emplace_back(r.delta, r.gap);
            return out;
        },
        py::arg("f"), py::arg("delta_grid"));

    m.def(
        "uncertainty_ratio",
        [](const CoeffVec& f, double d, const std::string& mode) { return uncertainty_ratio(f, d, mode_of(mode)); },
        py::arg("f"), py::arg("delta"), py::arg("mode") = "backward");
    m.def(
        "minimize_ratio",
        [](int dim, double delta, const std::string& mode, std::uint64_t seed, int restarts, int max_iters) {
            OptimizeConfig c;
            c.dim = dim;
            c.delta = delta;
            c.mode = mode_of(mode);
            c.seed = seed;
            c.restarts = restarts;
            c.max_iters = max_iters;
            OptimizeResult r;
            {
                py::gil_scoped_release release;
                r = minimize_ratio(c);
            }
            return to_py(to_json(c, r));
        },
        py::arg("dim") = 3, py::arg("delta") = 1.0, py::arg("mode") = "backward", py::arg("seed") = 0,
        py::arg("restarts") = 8, py::arg("max_iters") = 400);

    m.def(
        "validate_kernels",
        [](long max_lag, std::vector<double> deltas, double tol) {
            return to_py(to_json(oracle::validate_kernels(max_lag, deltas, tol)));
        },
        py::arg("max_lag") = 32, py::arg("deltas") = std::vector<double>{0.1, 0.25, 0.5, 0.75, 1.0},
        py::arg("tol") = 1e-10);
    m.def(
        "dense_grid_inner",
        [](const CoeffVec& f, const CoeffVec& g, double d) { return oracle::dense_grid_inner(f, g, d).value; },
        py::arg("f"), py::arg("g"), py::arg("delta") = 0.0);
}
