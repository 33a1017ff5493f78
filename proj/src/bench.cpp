#include "fde/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fde/decomp.hpp"
#include "fde/rdtm.hpp"
#include "fde/series.hpp"

namespace fde::bench {

namespace {

void require_finite_grid(const std::vector<double>& xs, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    for (double x : xs) {
        if (!std::isfinite(x)) throw std::invalid_argument("grid points must be finite");
    }
}

double approx_at(const model::Problem& p, Method m, double x, double t) {
    switch (m) {
        case Method::Rdtm:
            return rdtm::partial_sum_at(rdtm::build_spectra(p, x), t);
        case Method::Adm:
            return decomp::assemble_partial_sum(decomp::build_components(p, x, false), t);
        case Method::Ldm:
            return decomp::assemble_partial_sum(decomp::build_components(p, x, true), t);
    }
    throw std::logic_error("unhandled method");
}

// Keeps each timed build observable so it cannot be optimized away.
volatile double g_timing_sink = 0.0;

double build_once(const model::Problem& p, Method m, int steps, double center) {
    const int order = 2 * steps + p.guard;
    if (m == Method::Rdtm) {
        if (steps == 0) {
            return model::initial_condition(p, center, order).a.at(0);
        }
        model::Problem run = p;
        run.terms = steps;
        return rdtm::build_spectra(run, center).spectra.back().a.at(0);
    }
    if (steps == 0) {
        return model::initial_condition(p, center, order).a.at(0);
    }
    model::Problem run = p;
    run.terms = steps;
    auto comps = decomp::build_components(run, center, m == Method::Ldm);
    return comps.back().terms.begin()->second.a.at(0);
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Rdtm: return "rdtm";
        case Method::Adm: return "adm";
        case Method::Ldm: return "ldm";
    }
    throw std::logic_error("unhandled method");
}

Method parse_method(std::string_view name) {
    if (name == "rdtm") return Method::Rdtm;
    if (name == "adm") return Method::Adm;
    if (name == "ldm") return Method::Ldm;
    throw std::invalid_argument("unknown method \"" + std::string(name) +
                                "\" (expected rdtm, adm or ldm)");
}

std::optional<double> ErrorRow::abs_error() const {
    if (!exact) return std::nullopt;
    return std::abs(approx - *exact);
}

std::vector<ErrorRow> error_table(const model::Problem& p, const std::vector<double>& xs,
                                  double t, const std::vector<Method>& methods,
                                  bool with_exact, bool past_front) {
    require_finite_grid(xs, t);
    if (methods.empty()) throw std::invalid_argument("at least one method is required");
    if (with_exact && !(t >= 0.0)) {
        throw std::invalid_argument("time must be nonnegative when exact values are requested");
    }
    if (with_exact && p.kind == model::Kind::TanhWave && !past_front) {
        for (double x : xs) {
            if (x > p.c * t) {
                throw std::invalid_argument(
                    "grid point x=" + std::to_string(x) + " lies beyond the wave front (c*t=" +
                    std::to_string(p.c * t) +
                    "); error output there needs the past-front override");
            }
        }
    }

    std::vector<ErrorRow> rows;
    rows.reserve(xs.size() * methods.size());
    for (double x : xs) {
        for (Method m : methods) {
            ErrorRow row;
            row.x = x;
            row.method = m;
            row.approx = approx_at(p, m, x, t);
            if (with_exact) row.exact = model::exact_u(p, x, t);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<std::pair<double, double>> figure_series(const model::Problem& p,
                                                     const std::vector<double>& xs,
                                                     double t) {
    require_finite_grid(xs, t);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(xs.size());
    for (double x : xs) {
        const double approx = approx_at(p, Method::Rdtm, x, t);
        pts.emplace_back(x, std::abs(approx - model::exact_u(p, x, t)));
    }
    return pts;
}

TimingRecord timing_run(const model::Problem& p, Method m, int steps, int reps) {
    if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
    if (reps < 3) throw std::invalid_argument("at least 3 repetitions are required");
    const double center = -1.0;

    TimingRecord rec;
    rec.method = m;
    rec.steps = steps;
    rec.reps = reps;
    rec.wall_seconds = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        series::reset_mul_count();
        const auto t0 = std::chrono::steady_clock::now();
        g_timing_sink = g_timing_sink + build_once(p, m, steps, center);
        const auto t1 = std::chrono::steady_clock::now();
        rec.mul_count = series::mul_count();
        rec.wall_seconds =
            std::min(rec.wall_seconds, std::chrono::duration<double>(t1 - t0).count());
    }
    return rec;
}

const std::vector<ReferenceTiming>& reference_timings() {
    using model::Kind;
    static const std::vector<ReferenceTiming> table = {
        {Kind::TanhWave, Method::Adm, 5, 0.747},
        {Kind::TanhWave, Method::Ldm, 5, 1.212},
        {Kind::TanhWave, Method::Rdtm, 5, 0.488},
        {Kind::TanhWave, Method::Adm, 10, 1.316},
        {Kind::TanhWave, Method::Ldm, 10, 2.813},
        {Kind::TanhWave, Method::Rdtm, 10, 1.025},
        {Kind::TanhWave, Method::Adm, 15, 2.67},
        {Kind::TanhWave, Method::Ldm, 15, 4.656},
        {Kind::TanhWave, Method::Rdtm, 15, 1.846},
        {Kind::TanhWave, Method::Adm, 20, 5.235},
        {Kind::TanhWave, Method::Ldm, 20, 9.478},
        {Kind::TanhWave, Method::Rdtm, 20, 3.738},
        {Kind::TanhWave, Method::Adm, 25, 9.755},
        {Kind::TanhWave, Method::Ldm, 25, 15.910},
        {Kind::TanhWave, Method::Rdtm, 25, 5.716},
        {Kind::LogisticFront, Method::Adm, 5, 0.745},
        {Kind::LogisticFront, Method::Ldm, 5, 1.182},
        {Kind::LogisticFront, Method::Rdtm, 5, 0.491},
        {Kind::LogisticFront, Method::Adm, 10, 1.524},
        {Kind::LogisticFront, Method::Ldm, 10, 2.514},
        {Kind::LogisticFront, Method::Rdtm, 10, 0.994},
        {Kind::LogisticFront, Method::Adm, 15, 3.292},
        {Kind::LogisticFront, Method::Ldm, 15, 4.499},
        {Kind::LogisticFront, Method::Rdtm, 15, 2.245},
        {Kind::LogisticFront, Method::Adm, 20, 7.068},
        {Kind::LogisticFront, Method::Ldm, 20, 11.518},
        {Kind::LogisticFront, Method::Rdtm, 20, 4.095},
        {Kind::LogisticFront, Method::Adm, 25, 14.153},
        {Kind::LogisticFront, Method::Ldm, 25, 23.32},
        {Kind::LogisticFront, Method::Rdtm, 25, 7.681},
    };
    return table;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_reference_number(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') ch = '.';
        if (ch == 'D' || ch == 'd') ch = 'e';
        s.push_back(ch);
    }
    if (s.empty()) throw std::invalid_argument("empty number");

    const char* first = s.data();
    const char* last = s.data() + s.size();
    bool negative = false;
    if (*first == '+' || *first == '-') {
        negative = (*first == '-');
        ++first;
    }
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw std::invalid_argument("malformed number \"" + std::string(text) + "\"");
    }
    return negative ? -value : value;
}

void write_error_csv(std::ostream& os, const std::vector<ErrorRow>& rows) {
    os << "x,method,approx,exact,abs_error\n";
    for (const ErrorRow& row : rows) {
        os << format_double(row.x) << ',' << method_name(row.method) << ','
           << format_double(row.approx) << ',';
        if (row.exact) os << format_double(*row.exact);
        os << ',';
        if (auto err = row.abs_error()) os << format_double(*err);
        os << '\n';
    }
}

void write_figure_csv(std::ostream& os,
                      const std::vector<std::pair<double, double>>& pts) {
    os << "x,abs_error\n";
    for (const auto& [x, err] : pts) {
        os << format_double(x) << ',' << format_double(err) << '\n';
    }
}

void write_timing_csv(std::ostream& os, const std::vector<TimingRecord>& recs) {
    os << "method,steps,wall_seconds,mul_count,reps\n";
    for (const TimingRecord& rec : recs) {
        os << method_name(rec.method) << ',' << rec.steps << ','
           << format_double(rec.wall_seconds) << ',' << rec.mul_count << ',' << rec.reps
           << '\n';
    }
}

void write_reference_table(std::ostream& os) {
    os << "reference wall-clock seconds (fixed baseline environment, for context):\n";
    os << "  problem   steps      adm      ldm     rdtm\n";
    for (model::Kind kind : {model::Kind::TanhWave, model::Kind::LogisticFront}) {
        for (int steps : {5, 10, 15, 20, 25}) {
            double vals[3] = {0.0, 0.0, 0.0};
            for (const ReferenceTiming& rt : reference_timings()) {
                if (rt.kind != kind || rt.steps != steps) continue;
                const int slot = rt.method == Method::Adm ? 0
                               : rt.method == Method::Ldm ? 1
                                                          : 2;
                vals[slot] = rt.wall_seconds;
            }
            os << "  " << std::left << std::setw(10) << model::kind_name(kind)
               << std::right << std::setw(5) << steps;
            os << std::fixed << std::setprecision(3);
            for (double v : vals) os << std::setw(9) << v;
            os.unsetf(std::ios::floatfield);
            os << '\n';
        }
    }
}

}  // namespace fde::bench
