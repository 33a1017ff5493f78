#include "fde/rdtm.hpp"

#include <stdexcept>

namespace fde::rdtm {

series::TruncatedSeries next_spectrum(const SpectrumSequence& seq) {
    if (seq.spectra.empty()) throw std::invalid_argument("spectrum sequence is empty");
    const int k = static_cast<int>(seq.spectra.size()) - 1;
    series::TruncatedSeries rhs = model::convolved_nonlinearity(seq.spectra, k);
    return series::scale(rhs, 1.0 / (k + 1));
}

SpectrumSequence build_spectra(const model::Problem& p, double center) {
    SpectrumSequence seq{p, center, {}};
    seq.spectra.reserve(static_cast<std::size_t>(p.terms) + 1);
    seq.spectra.push_back(model::initial_condition(p, center, p.order()));
    for (int k = 0; k < p.terms; ++k) {
        seq.spectra.push_back(next_spectrum(seq));
    }
    return seq;
}

double partial_sum_at(const SpectrumSequence& seq, double t) {
    double s = 0.0;
    for (int k = static_cast<int>(seq.spectra.size()) - 1; k >= 0; --k) {
        s = series::eval(seq.spectra[k], seq.center) + t * s;
    }
    return s;
}

std::vector<double> solve_grid(const model::Problem& p, const std::vector<double>& xs,
                               double t) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back(partial_sum_at(build_spectra(p, x), t));
    }
    return out;
}

}  // namespace fde::rdtm
