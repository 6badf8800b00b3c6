#include "qwb/spectrum.hpp"

#include "qwb/format.hpp"
#include "qwb/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

namespace qwb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SpectrumResult sorted_result(const Eigen::VectorXcd& values, std::string source) {
    const Index n = values.size();
    Eigen::VectorXd raw(n);
    for (Index i = 0; i < n; ++i) raw(i) = wrap_phase(std::arg(values(i)));
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return raw(a) < raw(b); });

    SpectrumResult out;
    out.phases.resize(n);
    out.eigenvalues.resize(n);
    for (Index i = 0; i < n; ++i) {
        out.phases(i) = raw(order[static_cast<std::size_t>(i)]);
        out.eigenvalues(i) = values(order[static_cast<std::size_t>(i)]);
    }
    out.source = std::move(source);
    return out;
}

}  // namespace

SpectrumResult eigenphases(const Eigen::MatrixXcd& op, std::string source) {
    if (op.rows() != op.cols() || op.rows() == 0) {
        throw std::invalid_argument("eigenphases: operator must be square and non-empty");
    }
    const double dev = verify_unitarity(op);
    if (!(dev <= kUnitarityRejectTol)) {
        throw NumericalError("eigenphases: operator is not unitary (max |U†U - I| = " + format_double(dev) + ")");
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op, /* computeEigenvectors = */ false);
    if (solver.info() != Eigen::Success) throw NumericalError("eigenphases: eigensolver did not converge");
    const Eigen::VectorXcd& values = solver.eigenvalues();
    for (Index i = 0; i < values.size(); ++i) {
        const double drift = std::abs(std::abs(values(i)) - 1.0);
        if (!(drift <= kUnitarityRejectTol)) {
            throw NumericalError("eigenphases: eigenvalue modulus drift " + format_double(drift));
        }
    }
    return sorted_result(values, std::move(source));
}

SpectrumResult eigenphases(const UnitaryOperator& op) { return eigenphases(op.matrix, "direct: " + op.label); }

SpectrumResult spectrum_from_phases(std::vector<double> phases, std::string source) {
    std::transform(phases.begin(), phases.end(), phases.begin(), [](double p) { return wrap_phase(p); });
    std::sort(phases.begin(), phases.end());
    SpectrumResult out;
    out.phases = Eigen::Map<const Eigen::VectorXd>(phases.data(), static_cast<Index>(phases.size()));
    out.eigenvalues = out.phases.unaryExpr([](double p) { return std::polar(1.0, p); });
    out.source = std::move(source);
    return out;
}

double phase_multiset_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.size() == 0) return 0.0;
    auto unit = [](double x) {
        double r = std::fmod(x, kTwoPi);
        return r < 0 ? r + kTwoPi : r;
    };
    std::vector<double> sa(static_cast<std::size_t>(a.size()));
    std::transform(a.begin(), a.end(), sa.begin(), unit);
    std::sort(sa.begin(), sa.end());

    // Cut the circle in the middle of the widest gap of `a`.
    double cut = sa.front() - 0.5 * (sa.front() + kTwoPi - sa.back());
    double widest = sa.front() + kTwoPi - sa.back();
    for (std::size_t i = 1; i < sa.size(); ++i) {
        const double gap = sa[i] - sa[i - 1];
        if (gap > widest) {
            widest = gap;
            cut = sa[i - 1] + 0.5 * gap;
        }
    }
    auto rotated = [&](const Eigen::VectorXd& v) {
        std::vector<double> r(static_cast<std::size_t>(v.size()));
        std::transform(v.begin(), v.end(), r.begin(), [&](double x) { return unit(x - cut); });
        std::sort(r.begin(), r.end());
        return r;
    };
    const std::vector<double> ra = rotated(a);
    const std::vector<double> rb = rotated(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        worst = std::max(worst, std::abs(std::remainder(ra[i] - rb[i], kTwoPi)));
    }
    return worst;
}

Eigen::MatrixXcd bloch_matrix(double theta, const Grid1D& grid, BilliardKind kind, const HopPhases& hops,
                              BlochSigns signs) {
    const std::vector<Index> perm = shift_permutation(grid, kind);
    const int hop = kind == BilliardKind::One ? 1 : 2;
    const Index dim = grid.dim();

    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
    for (Index c = 0; c < dim; ++c) {
        const Index r = perm[static_cast<std::size_t>(c)];
        const int from = grid.site_spin(c).first;
        const int to = grid.site_spin(r).first;
        Complex factor{1.0, 0.0};
        if (to == from - hop) factor = hops.from_right;
        else if (to == from + hop) factor = hops.from_left;
        shift(r, c) = factor;
        if (signs == BlochSigns::Printed && grid.site_spin(c).second == Spin::Down) shift(r, c) = -factor;
    }
    return shift * coin_operator(grid, theta).matrix;
}

namespace {

Grid1D index_grid(int sites) {
    if (sites < 2) throw std::invalid_argument("Bloch matrix needs at least two sites");
    return Grid1D(0, sites - 1);
}

}  // namespace

Eigen::MatrixXcd bloch_kind1(double theta, double k, int sites, BlochSigns signs) {
    return bloch_matrix(theta, index_grid(sites), BilliardKind::One, {std::polar(1.0, k), std::polar(1.0, -k)},
                        signs);
}

Eigen::MatrixXcd bloch_kind2(double theta, double k, int sites, BlochSigns signs) {
    return bloch_matrix(theta, index_grid(sites), BilliardKind::Two, {std::polar(1.0, k), std::polar(1.0, -k)},
                        signs);
}

HopPhases substitution_phases(const BlochParams& p, const CurvedPath& path, BilliardKind kind) {
    const PathFunction& f = path.path();
    const double a = p.alpha;
    const double fa = f(a);
    if (p.variant == BlochVariant::Literal) {
        const double s = path.step();
        return {std::polar(1.0, p.k_path + (f(a - s) - fa) + p.k_alpha),
                std::polar(1.0, p.k_path + (f(a + s) - fa) - p.k_alpha)};
    }
    const double h = path.step() * (kind == BilliardKind::One ? 1.0 : 2.0);
    return {std::polar(1.0, p.k_path * (f(a + h) - fa) + p.k_alpha * h),
            std::polar(1.0, p.k_path * (f(a - h) - fa) - p.k_alpha * h)};
}

Eigen::MatrixXcd bloch_curved(double theta, const BlochParams& params, const CurvedPath& path, BilliardKind kind) {
    const Grid1D grid = index_grid(path.point_count());
    return bloch_matrix(theta, grid, kind, substitution_phases(params, path, kind), params.signs);
}

DispersionTable dispersion_scan(const std::function<Eigen::MatrixXcd(double)>& builder, double k_min,
                                double k_max, int resolution, int threads) {
    if (resolution < 2) throw std::invalid_argument("dispersion_scan: resolution must be >= 2");
    DispersionTable table;
    table.k.resize(static_cast<std::size_t>(resolution));
    table.phases.resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        table.k[static_cast<std::size_t>(i)] = k_min + (k_max - k_min) * static_cast<double>(i) / (resolution - 1);
    }
    parallel_for(resolution, threads, [&](Index i) {
        const auto slot = static_cast<std::size_t>(i);
        table.phases[slot] = eigenphases(builder(table.k[slot]), "bloch").phases;
    });
    return table;
}

void write_csv(std::ostream& os, const SpectrumResult& spectrum) {
    os << "index,re,im,phase\n";
    for (Index i = 0; i < spectrum.size(); ++i) {
        os << i << ',' << format_double(spectrum.eigenvalues(i).real()) << ','
           << format_double(spectrum.eigenvalues(i).imag()) << ',' << format_double(spectrum.phases(i)) << '\n';
    }
}

void write_csv(std::ostream& os, const DispersionTable& table) {
    os << "k,band_index,phase\n";
    for (std::size_t i = 0; i < table.k.size(); ++i) {
        const Eigen::VectorXd& ph = table.phases[i];
        for (Index b = 0; b < ph.size(); ++b) {
            os << format_double(table.k[i]) << ',' << b << ',' << format_double(ph(b)) << '\n';
        }
    }
}

}  // namespace qwb
