// Python module exposing the main solver operations: grid solutions by
// any of the three routes, the closed-form waves, raw spectrum values,
// and the instrumented timing runs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fde/bench.hpp"
#include "fde/model.hpp"
#include "fde/rdtm.hpp"
#include "fde/series.hpp"

namespace py = pybind11;

namespace {

fde::model::Problem make_problem(const std::string& problem, double c, int terms, int guard) {
    const auto kind = fde::model::parse_kind(problem);
    return kind == fde::model::Kind::TanhWave ? fde::model::make_tanh_wave(c, terms, guard)
                                              : fde::model::make_logistic_front(terms, guard);
}

}  // namespace

PYBIND11_MODULE(_foamdrain, m) {
    m.doc() = "Semi-analytic series solutions of the foam drainage equation";

    m.def(
        "solve",
        [](const std::string& problem, const std::vector<double>& xs, double t, double c,
           int terms, int guard, const std::string& method) {
            const auto p = make_problem(problem, c, terms, guard);
            const auto rows =
                fde::bench::error_table(p, xs, t, {fde::bench::parse_method(method)},
                                        /*with_exact=*/false, /*past_front=*/false);
            std::vector<double> out;
            out.reserve(rows.size());
            for (const auto& row : rows) out.push_back(row.approx);
            return out;
        },
        py::arg("problem"), py::arg("xs"), py::arg("t"), py::arg("c") = 1.0,
        py::arg("terms") = 10, py::arg("guard") = 4, py::arg("method") = "rdtm",
        "Truncated-series solution values at the given grid points.");

    m.def(
        "exact_u",
        [](const std::string& problem, double c, double x, double t) {
            return fde::model::exact_u(make_problem(problem, c, 1, 0), x, t);
        },
        py::arg("problem"), py::arg("c"), py::arg("x"), py::arg("t"),
        "Closed-form solution value (piecewise behind/ahead of the front for 'tanh').");

    m.def(
        "spectrum_values",
        [](const std::string& problem, double c, int terms, int guard, double center) {
            const auto p = make_problem(problem, c, terms, guard);
            const auto seq = fde::rdtm::build_spectra(p, center);
            std::vector<double> out;
            out.reserve(seq.spectra.size());
            for (const auto& s : seq.spectra) out.push_back(fde::series::eval(s, center));
            return out;
        },
        py::arg("problem"), py::arg("c"), py::arg("terms"), py::arg("guard"),
        py::arg("center"),
        "Values U_k(center) of the t-Taylor spectra, k = 0..terms.");

    m.def(
        "timing",
        [](const std::string& problem, const std::string& method, int steps, int reps) {
            const auto p = make_problem(problem, 1.0, 10, 4);
            const auto rec =
                fde::bench::timing_run(p, fde::bench::parse_method(method), steps, reps);
            return py::make_tuple(rec.wall_seconds, rec.mul_count);
        },
        py::arg("problem"), py::arg("method"), py::arg("steps"), py::arg("reps") = 3,
        "Best wall time and series-multiplication count for one instrumented build.");
}
