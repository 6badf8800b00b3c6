#include "qwb/statistics.hpp"

#include "qwb/format.hpp"

#include <numeric>
#include <ostream>

namespace qwb {

namespace {

SpacingSequence finish(std::vector<double> kept, std::vector<double> excluded) {
    if (kept.empty()) throw std::invalid_argument("spacing sequence is empty");
    const double mean = std::accumulate(kept.begin(), kept.end(), 0.0) / static_cast<double>(kept.size());
    if (!(mean > 0.0)) throw std::domain_error("spacing sequence has zero mean (fully degenerate spectrum)");
    SpacingSequence seq;
    seq.spacings.resize(static_cast<Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) seq.spacings(static_cast<Index>(i)) = kept[i] / mean;
    seq.excluded_gaps = std::move(excluded);
    seq.raw_mean = mean;
    return seq;
}

}  // namespace

SpacingSequence spacings_from_phases(const Eigen::VectorXd& sorted_phases, const SpacingOptions& options) {
    const Index n = sorted_phases.size();
    if (n < 3) throw std::invalid_argument("spacings: need at least 3 levels (got " + std::to_string(n) + ")");
    if (options.gaps_to_exclude < 0) throw std::invalid_argument("spacings: gaps_to_exclude must be >= 0");
    if (options.gaps_to_exclude >= n - 1) {
        throw std::invalid_argument("spacings: gaps_to_exclude must be < level count - 1");
    }
    if (options.degeneracy_tolerance < 0.0) throw std::invalid_argument("spacings: negative degeneracy tolerance");

    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        if (i > 0 && sorted_phases(i) < sorted_phases(i - 1)) {
            throw std::invalid_argument("spacings: phases are not sorted");
        }
        if (!levels.empty() && options.degeneracy_tolerance > 0.0 &&
            sorted_phases(i) - levels.back() <= options.degeneracy_tolerance) {
            continue;
        }
        levels.push_back(sorted_phases(i));
    }

    std::vector<double> raw;
    raw.reserve(levels.size());
    for (std::size_t i = 1; i < levels.size(); ++i) raw.push_back(levels[i] - levels[i - 1]);
    if (options.circular) raw.push_back(2.0 * std::numbers::pi - (levels.back() - levels.front()));

    const auto g = static_cast<std::size_t>(options.gaps_to_exclude);
    if (g >= raw.size()) throw std::invalid_argument("spacings: excluding every spacing");
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });

    std::vector<bool> drop(raw.size(), false);
    std::vector<double> excluded;
    excluded.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        drop[order[i]] = true;
        excluded.push_back(raw[order[i]]);
    }
    std::vector<double> kept;
    kept.reserve(raw.size() - g);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!drop[i]) kept.push_back(raw[i]);
    }
    return finish(std::move(kept), std::move(excluded));
}

SpacingSequence spacings_from_spectrum(const SpectrumResult& spectrum, const SpacingOptions& options) {
    return spacings_from_phases(spectrum.phases, options);
}

SpacingSequence normalized_spacings(const Eigen::VectorXd& raw) {
    std::vector<double> kept(raw.begin(), raw.end());
    for (double s : kept) {
        if (!(s >= 0.0)) throw std::invalid_argument("normalized_spacings: negative or NaN entry");
    }
    return finish(std::move(kept), {});
}

SpacingHistogram histogram(const SpacingSequence& seq, int bins) {
    if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
    const Index n = seq.spacings.size();
    if (n == 0) throw std::invalid_argument("histogram: empty spacing sequence");
    const double top = seq.spacings.maxCoeff();
    if (!(top > 0.0)) throw std::domain_error("histogram: all spacings are zero");

    const double width = top / bins;
    SpacingHistogram h;
    h.bin_edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) h.bin_edges(b) = top * static_cast<double>(b) / bins;
    h.bin_edges(bins) = top;
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(bins);
    for (Index i = 0; i < n; ++i) {
        const int b = std::min(bins - 1, static_cast<int>(seq.spacings(i) / width));
        counts(b) += 1.0;
    }
    h.densities.resize(bins);
    for (int b = 0; b < bins; ++b) {
        h.densities(b) = counts(b) / (static_cast<double>(n) * (h.bin_edges(b + 1) - h.bin_edges(b)));
    }
    return h;
}

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::WignerLike: return "WignerLike";
        case Verdict::PoissonLike: return "PoissonLike";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Classification classify(const SpacingSequence& seq, double band) {
    if (seq.spacings.size() < 10) {
        throw std::invalid_argument("classify: need at least 10 spacings (got " +
                                    std::to_string(seq.spacings.size()) + ")");
    }
    Classification c;
    c.ks_wigner = ks_distance(seq.spacings, [](double s) { return wigner_cdf(s); });
    c.ks_poisson = ks_distance(seq.spacings, [](double s) { return poisson_cdf(s); });
    c.n_spacings = seq.spacings.size();
    c.gaps_excluded = static_cast<int>(seq.excluded_gaps.size());
    if (std::abs(c.ks_wigner - c.ks_poisson) < band) {
        c.verdict = Verdict::Inconclusive;
    } else {
        c.verdict = c.ks_wigner < c.ks_poisson ? Verdict::WignerLike : Verdict::PoissonLike;
    }
    return c;
}

void write_csv(std::ostream& os, const SpacingSequence& seq) {
    os << "index,spacing\n";
    for (Index i = 0; i < seq.spacings.size(); ++i) os << i << ',' << format_double(seq.spacings(i)) << '\n';
}

void write_csv(std::ostream& os, const SpacingHistogram& hist) {
    os << "bin_left,bin_right,density\n";
    for (Index b = 0; b < hist.bins(); ++b) {
        os << format_double(hist.bin_edges(b)) << ',' << format_double(hist.bin_edges(b + 1)) << ','
           << format_double(hist.densities(b)) << '\n';
    }
}

}  // namespace qwb
