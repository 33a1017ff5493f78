#include "fde/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

namespace fde::cli {

namespace {

double parse_plain_double(const std::string& text, const char* what) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    bool negative = false;
    if (first != last && (*first == '+' || *first == '-')) {
        negative = (*first == '-');
        ++first;
    }
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (first == last || res.ec != std::errc{} || res.ptr != last) {
        throw std::invalid_argument(std::string(what) + ": malformed number \"" + text +
                                    "\"");
    }
    return negative ? -value : value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// Rewrites "--flag value" into "--flag=value" for all value-taking flags,
// so values with a leading minus ("--xs -10:0:2") survive option parsing.
std::vector<std::string> join_flag_values(const std::vector<std::string>& args) {
    static const std::set<std::string> value_flags = {
        "--problem", "--c", "--t", "--terms", "--guard",
        "--xs",      "--methods", "--steps", "--reps", "--out"};
    std::vector<std::string> out;
    out.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (value_flags.count(args[i]) != 0 && i + 1 < args.size()) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.terms < 1) throw std::invalid_argument("--terms: must be at least 1");
    if (cfg.guard < 0) throw std::invalid_argument("--guard: must be nonnegative");
    if (!std::isfinite(cfg.t)) throw std::invalid_argument("--t: must be finite");
    if (cfg.kind == model::Kind::TanhWave && !(cfg.c > 0.0 && std::isfinite(cfg.c))) {
        throw std::invalid_argument("--c: wave speed must be positive and finite");
    }
    if (cfg.command == Command::Bench) {
        if (cfg.steps.empty()) throw std::invalid_argument("--steps: list must be nonempty");
        if (cfg.reps < 3) throw std::invalid_argument("--reps: at least 3 required");
    } else {
        if (cfg.xs.empty()) throw std::invalid_argument("--xs: grid must be nonempty");
    }
    if (cfg.methods.empty()) throw std::invalid_argument("--methods: list must be nonempty");
}

model::Problem make_problem(const RunConfig& cfg) {
    if (cfg.kind == model::Kind::TanhWave) {
        return model::make_tanh_wave(cfg.c, cfg.terms, cfg.guard);
    }
    return model::make_logistic_front(cfg.terms, cfg.guard);
}

void require_finite_results(const std::vector<bench::ErrorRow>& rows) {
    for (const auto& row : rows) {
        if (!std::isfinite(row.approx) || (row.exact && !std::isfinite(*row.exact))) {
            throw std::runtime_error("non-finite value in computed results");
        }
    }
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("--xs: empty grid specification");
    std::vector<double> xs;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("--xs: range must be start:stop:step");
        }
        const double start = parse_plain_double(parts[0], "--xs start");
        const double stop = parse_plain_double(parts[1], "--xs stop");
        const double step = parse_plain_double(parts[2], "--xs step");
        if (step == 0.0) throw std::invalid_argument("--xs: step must be nonzero");
        // Inclusive endpoints within half a step; points generated by index
        // multiplication so long ranges do not accumulate rounding error.
        const double limit = stop + 0.5 * step;
        for (int i = 0;; ++i) {
            const double x = start + i * step;
            if (step > 0.0 ? x > limit : x < limit) break;
            xs.push_back(x);
            if (i > 1000000) throw std::invalid_argument("--xs: range produces too many points");
        }
        if (xs.empty()) {
            throw std::invalid_argument("--xs: range produces no points (step sign?)");
        }
    } else {
        for (const auto& part : split(spec, ',')) {
            xs.push_back(parse_plain_double(part, "--xs"));
        }
    }
    return xs;
}

std::vector<bench::Method> parse_methods(const std::string& spec) {
    std::vector<bench::Method> methods;
    for (const auto& part : split(spec, ',')) {
        if (part.empty()) throw std::invalid_argument("--methods: empty method name");
        methods.push_back(bench::parse_method(part));
    }
    return methods;
}

std::vector<int> parse_steps(const std::string& spec) {
    std::vector<int> steps;
    for (const auto& part : split(spec, ',')) {
        int value = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
            throw std::invalid_argument("--steps: malformed count \"" + part + "\"");
        }
        if (value < 0) throw std::invalid_argument("--steps: counts must be nonnegative");
        steps.push_back(value);
    }
    return steps;
}

ParseOutcome parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Semi-analytic series solver for the foam drainage equation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string problem;
    std::string xs_spec;
    std::string methods_spec = "rdtm,adm,ldm";
    std::string steps_spec = "5,10,15,20,25";

    const auto add_common = [&](CLI::App* sub, bool needs_grid, bool needs_time) {
        sub->add_option("--problem", problem, "Problem kind: tanh or logistic")->required();
        sub->add_option("--c", cfg.c, "Wave speed (tanh problem)");
        sub->add_option("--terms", cfg.terms, "Number of series terms K");
        sub->add_option("--guard", cfg.guard, "Extra series orders beyond 2K");
        sub->add_option("--out", cfg.out, "Output path, or - for standard output");
        if (needs_time) sub->add_option("--t", cfg.t, "Evaluation time")->required();
        if (needs_grid) {
            sub->add_option("--xs", xs_spec, "Grid: comma list or start:stop:step")
                ->required();
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "Evaluate truncated solutions on a grid");
    add_common(solve, true, true);
    solve->add_option("--methods", methods_spec, "Comma list: rdtm, adm, ldm");

    CLI::App* table = app.add_subcommand("table", "Solutions next to the closed form");
    add_common(table, true, true);
    table->add_option("--methods", methods_spec, "Comma list: rdtm, adm, ldm");
    table->add_flag("--past-front", cfg.past_front,
                    "Allow error output beyond the wave front");

    CLI::App* figure = app.add_subcommand("figure", "Absolute-error curve data");
    add_common(figure, true, true);

    CLI::App* benchcmd = app.add_subcommand("bench", "Timing and operation counts");
    benchcmd->add_option("--problem", problem, "Problem kind: tanh or logistic");
    benchcmd->add_option("--c", cfg.c, "Wave speed (tanh problem)");
    benchcmd->add_option("--guard", cfg.guard, "Extra series orders beyond 2K");
    benchcmd->add_option("--steps", steps_spec, "Comma list of step counts");
    benchcmd->add_option("--reps", cfg.reps, "Repetitions per timing (min 3)");
    benchcmd->add_option("--methods", methods_spec, "Comma list: rdtm, adm, ldm");
    benchcmd->add_option("--out", cfg.out, "Output path, or - for standard output");

    const std::vector<std::string> joined = join_flag_values(args);
    std::vector<const char*> argv;
    argv.reserve(joined.size() + 1);
    argv.push_back("foamdrain");
    for (const auto& tok : joined) argv.push_back(tok.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {std::nullopt, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {std::nullopt, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    if (solve->parsed()) cfg.command = Command::Solve;
    if (table->parsed()) cfg.command = Command::Table;
    if (figure->parsed()) cfg.command = Command::Figure;
    if (benchcmd->parsed()) cfg.command = Command::Bench;

    cfg.kind = problem.empty() ? model::Kind::TanhWave : model::parse_kind(problem);
    if (!xs_spec.empty()) cfg.xs = parse_grid(xs_spec);
    cfg.methods = parse_methods(methods_spec);
    if (cfg.command == Command::Bench) cfg.steps = parse_steps(steps_spec);
    validate_config(cfg);
    return {cfg, {}};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const model::Problem p = make_problem(cfg);

    std::ostringstream csv;
    switch (cfg.command) {
        case Command::Solve: {
            const auto rows =
                bench::error_table(p, cfg.xs, cfg.t, cfg.methods, false, cfg.past_front);
            require_finite_results(rows);
            bench::write_error_csv(csv, rows);
            break;
        }
        case Command::Table: {
            // The compact-front problem has a closed form to compare against;
            // the logistic table reports plain solution values.
            const bool with_exact = (p.kind == model::Kind::TanhWave);
            const auto rows =
                bench::error_table(p, cfg.xs, cfg.t, cfg.methods, with_exact, cfg.past_front);
            require_finite_results(rows);
            bench::write_error_csv(csv, rows);
            break;
        }
        case Command::Figure: {
            const auto pts = bench::figure_series(p, cfg.xs, cfg.t);
            for (const auto& [x, e] : pts) {
                if (!std::isfinite(e)) {
                    throw std::runtime_error("non-finite value in computed results");
                }
                (void)x;
            }
            bench::write_figure_csv(csv, pts);
            break;
        }
        case Command::Bench: {
            std::vector<bench::TimingRecord> recs;
            recs.reserve(cfg.methods.size() * cfg.steps.size());
            for (bench::Method m : cfg.methods) {
                for (int steps : cfg.steps) {
                    recs.push_back(bench::timing_run(p, m, steps, cfg.reps));
                }
            }
            bench::write_timing_csv(csv, recs);
            bench::write_reference_table(err);
            break;
        }
    }

    if (cfg.out == "-") {
        out << csv.str();
        return 0;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        err << "error: cannot open output path \"" << cfg.out << "\"\n";
        return 4;
    }
    file << csv.str();
    file.flush();
    if (!file.good()) {
        err << "error: failed writing output path \"" << cfg.out << "\"\n";
        return 4;
    }
    return 0;
}

int main_entry(int argc, const char* const* argv) {
    try {
        const ParseOutcome outcome =
            parse_args(std::vector<std::string>(argv + 1, argv + argc));
        if (!outcome.config) {
            std::cout << outcome.help;
            return 0;
        }
        return run(*outcome.config, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace fde::cli
