// Nearest-neighbour spacing statistics of quasi-energies.
//
// Spacings are only mean-normalized; no further unfolding is applied.

#pragma once

#include "qwb/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qwb {

struct SpacingOptions {
    int gaps_to_exclude = 2;
    bool circular = true;
    // Levels closer than this to their predecessor are merged first; 0 keeps
    // every degeneracy as a zero spacing.
    double degeneracy_tolerance = 0.0;
};

struct SpacingSequence {
    Eigen::VectorXd spacings;          // mean 1
    std::vector<double> excluded_gaps; // raw values removed, largest first
    double raw_mean = 0.0;             // mean of the kept raw spacings
};

// Consecutive differences of the sorted phases (plus the wraparound interval
// when circular), minus the `gaps_to_exclude` largest, divided by their mean.
// Equal spacings are excluded lowest sorted position first.
SpacingSequence spacings_from_phases(const Eigen::VectorXd& sorted_phases, const SpacingOptions& options);
SpacingSequence spacings_from_spectrum(const SpectrumResult& spectrum, const SpacingOptions& options);

// Mean-normalizes an arbitrary non-negative sample (no gap exclusion).
SpacingSequence normalized_spacings(const Eigen::VectorXd& raw);

template <typename Scalar>
Scalar wigner_pdf(Scalar s) {
    if (s < Scalar(0)) throw std::domain_error("wigner_pdf: s must be >= 0");
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    return pi / Scalar(2) * s * std::exp(-pi * s * s / Scalar(4));
}

template <typename Scalar>
Scalar wigner_cdf(Scalar s) {
    if (s <= Scalar(0)) return Scalar(0);
    return -std::expm1(-std::numbers::pi_v<Scalar> * s * s / Scalar(4));
}

template <typename Scalar>
Scalar poisson_pdf(Scalar s) {
    if (s < Scalar(0)) throw std::domain_error("poisson_pdf: s must be >= 0");
    return std::exp(-s);
}

template <typename Scalar>
Scalar poisson_cdf(Scalar s) {
    if (s <= Scalar(0)) return Scalar(0);
    return -std::expm1(-s);
}

struct SpacingHistogram {
    Eigen::VectorXd bin_edges;  // bins + 1 entries over [0, max spacing]
    Eigen::VectorXd densities;

    Index bins() const noexcept { return densities.size(); }
};

SpacingHistogram histogram(const SpacingSequence& seq, int bins);

enum class Verdict { WignerLike, PoissonLike, Inconclusive };

std::string_view verdict_name(Verdict v) noexcept;

struct Classification {
    double ks_wigner = 0.0;
    double ks_poisson = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    Index n_spacings = 0;
    int gaps_excluded = 0;
};

inline constexpr double kInconclusiveBand = 0.05;

// Kolmogorov-Smirnov sup distance to each reference; the closer one wins
// unless the two distances differ by less than `band`. Needs ≥ 10 spacings.
Classification classify(const SpacingSequence& seq, double band = kInconclusiveBand);

// sup |F_n − F| for a sample against a continuous CDF.
template <typename Cdf>
double ks_distance(Eigen::VectorXd sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (Index i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample(i));
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

// `index,spacing`
void write_csv(std::ostream& os, const SpacingSequence& seq);
// `bin_left,bin_right,density`
void write_csv(std::ostream& os, const SpacingHistogram& hist);

}  // namespace qwb
