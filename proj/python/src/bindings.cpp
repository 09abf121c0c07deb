#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avelab/ave.hpp"
#include "avelab/bench.hpp"
#include "avelab/compare.hpp"
#include "avelab/errors.hpp"
#include "avelab/homotopy.hpp"
#include "avelab/lcp.hpp"
#include "avelab/report.hpp"
#include "avelab/spectrum.hpp"

namespace py = pybind11;
using namespace avelab;

namespace {

// Structured results cross the boundary as plain dicts, built from the same JSON the CLI prints.
py::object to_python(const report::Json& j) {
    return py::module_::import("json").attr("loads")(report::dump(j));
}

Tolerances tolerances_or_default(const std::optional<Tolerances>& tol) {
    Tolerances t = tol.value_or(Tolerances{});
    t.validate();
    return t;
}

}  // namespace

PYBIND11_MODULE(_avelab, m) {
    m.doc() = "Aligning spectra, absolute value equations and their mapping degree";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
    py::register_exception<DimensionCapExceeded>(m, "DimensionCapExceeded", error.ptr());
    py::register_exception<NumericFailure>(m, "NumericFailure", error.ptr());
    py::register_exception<InvariantBreach>(m, "InvariantBreach", error.ptr());

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init([](double residual, double im, double nonneg, double boundary, double dedupe, double sing,
                         std::size_t max_n) {
                 Tolerances t{residual, im, nonneg, boundary, dedupe, sing, max_n};
                 t.validate();
                 return t;
             }),
             py::kw_only(), py::arg("residual") = 1e-9, py::arg("im") = 1e-9, py::arg("nonneg") = 1e-9,
             py::arg("boundary") = 1e-9, py::arg("dedupe") = 1e-7, py::arg("sing") = 1e-11,
             py::arg("max_n") = kDefaultMaxDimension)
        .def_readwrite("residual", &Tolerances::residual)
        .def_readwrite("im", &Tolerances::im)
        .def_readwrite("nonneg", &Tolerances::nonneg)
        .def_readwrite("boundary", &Tolerances::boundary)
        .def_readwrite("dedupe", &Tolerances::dedupe)
        .def_readwrite("sing", &Tolerances::sing)
        .def_readwrite("max_n", &Tolerances::max_n)
        .def("to_dict", [](const Tolerances& t) { return to_python(report::to_json(t)); });

    using OptTol = std::optional<Tolerances>;


    m.def(
        "aligning_spectrum",
        [](const Matrix& a, const OptTol& tol) {
            const auto t = tolerances_or_default(tol);
            return to_python(report::to_json(spectrum::aligning_spectrum(a, t), t));
        },
        py::arg("a"), py::arg("tol") = py::none(), "Aligning eigenpairs of A over all 2^n signatures.");
    m.def(
        "rho_a", [](const Matrix& a, const OptTol& tol) { return spectrum::rho_a(a, tolerances_or_default(tol)); },
        py::arg("a"), py::arg("tol") = py::none(), "Aligning spectral radius.");
    m.def(
        "rho_R",
        [](const Matrix& a, const OptTol& tol) { return spectrum::rho_sign_real(a, tolerances_or_default(tol)); },
        py::arg("a"), py::arg("tol") = py::none(), "Sign-real spectral radius.");
    m.def(
        "is_degenerate",
        [](const Matrix& a, const OptTol& tol) { return spectrum::is_degenerate(a, tolerances_or_default(tol)); },
        py::arg("a"), py::arg("tol") = py::none(), "True when 1 is an aligning value.");
    m.def(
        "simplicity",
        [](const Matrix& a, const OptTol& tol) {
            return to_python(report::to_json(spectrum::simplicity(a, tolerances_or_default(tol))));
        },
        py::arg("a"), py::arg("tol") = py::none());

    m.def(
        "solve",
        [](const Matrix& a, const Vector& b, const OptTol& tol) {
            return to_python(report::to_json(ave::solve_all(a, b, tolerances_or_default(tol))));
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = py::none(), "All solutions of z - A|z| = b by orthant enumeration.");
    m.def(
        "degree",
        [](const Matrix& a, std::uint64_t seed, int trials, int max_rejections, const OptTol& tol) {
            const ave::DegreeOptions opts{seed, trials, max_rejections};
            return to_python(report::to_json(ave::degree(a, tolerances_or_default(tol), opts)));
        },
        py::arg("a"), py::kw_only(), py::arg("seed") = 42, py::arg("trials") = 7, py::arg("max_rejections") = 100,
        py::arg("tol") = py::none(), "Mapping degree of z - A|z|; 'degree' is None when undefined.");

    m.def(
        "properness_breakpoints",
        [](const Matrix& a, const OptTol& tol) {
            return homotopy::properness_breakpoints(a, tolerances_or_default(tol)).breakpoints;
        },
        py::arg("a"), py::arg("tol") = py::none());
    m.def(
        "degree_profile",
        [](const Matrix& a, const std::vector<double>& ts, const OptTol& tol) {
            py::list out;
            for (const auto& p : homotopy::degree_profile(a, ts, tolerances_or_default(tol))) {
                out.append(to_python(report::to_json(p)));
            }
            return out;
        },
        py::arg("a"), py::arg("ts"), py::arg("tol") = py::none());
    m.def(
        "circle_trace",
        [](const Matrix& a, double t, std::size_t samples) {
            const auto trace = homotopy::circle_trace(a, t, samples);
            Eigen::Matrix<double, Eigen::Dynamic, 5, Eigen::RowMajor> rows(trace.samples.size(), 5);
            for (std::size_t k = 0; k < trace.samples.size(); ++k) {
                const auto& s = trace.samples[k];
                rows.row(static_cast<Eigen::Index>(k)) << s.theta, s.point[0], s.point[1], s.image[0], s.image[1];
            }
            return rows;
        },
        py::arg("a"), py::arg("t"), py::arg("samples") = 360,
        "Rows (theta, x1, x2, fx1, fx2) of the unit circle and its image under z - tA|z| (2x2 only).");
    m.def(
        "winding_number",
        [](const Matrix& a, double t, std::size_t samples, const OptTol& tol) {
            return homotopy::winding_number(homotopy::circle_trace(a, t, samples), tolerances_or_default(tol));
        },
        py::arg("a"), py::arg("t"), py::arg("samples") = 360, py::arg("tol") = py::none());

    m.def(
        "ave_to_lcp",
        [](const Matrix& a, const std::string& sigma, const Vector& b, const OptTol& tol) {
            const auto inst = lcp::ave_to_lcp(a, Signature::parse(sigma), b, tolerances_or_default(tol));
            return py::make_tuple(inst.M, inst.q);
        },
        py::arg("a"), py::arg("sigma"), py::arg("b"), py::arg("tol") = py::none(), "Returns (M, q) of the equivalent LCP.");
    m.def(
        "q_check",
        [](const Matrix& mm, std::uint64_t seed, int samples, const OptTol& tol) {
            return to_python(report::to_json(lcp::q_check(mm, tolerances_or_default(tol), seed, samples)));
        },
        py::arg("m"), py::kw_only(), py::arg("seed") = 42, py::arg("samples") = 500, py::arg("tol") = py::none());
    m.def(
        "p_matrix_check",
        [](const Matrix& mm, const OptTol& tol) { return lcp::p_matrix_check(mm, tolerances_or_default(tol)); },
        py::arg("m"), py::arg("tol") = py::none());

    m.def(
        "quotient_functional",
        [](const Matrix& a, const Vector& x, const OptTol& tol) {
            return compare::quotient_functional(a, x, tolerances_or_default(tol));
        },
        py::arg("a"), py::arg("x"), py::arg("tol") = py::none());
    m.def(
        "coincidence_report",
        [](const Matrix& a, std::uint64_t seed, int restarts, int iterations, double band, const OptTol& tol) {
            compare::SearchOptions opts;
            opts.seed = seed;
            opts.restarts = restarts;
            opts.iterations = iterations;
            return to_python(report::to_json(compare::coincidence_report(a, tolerances_or_default(tol), opts, band)));
        },
        py::arg("a"), py::kw_only(), py::arg("seed") = 42, py::arg("restarts") = 64, py::arg("iterations") = 500,
        py::arg("band") = 1e-3, py::arg("tol") = py::none());

    m.def("suite_names", &bench::suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed) { return to_python(bench::run_suite(name, seed).to_json()); },
        py::arg("name"), py::arg("seed") = 42, "Run a randomized property suite; returns its report.");
}
