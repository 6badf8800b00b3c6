#include "qwb/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwb::reference {

using Eigen::Index;

Eigen::VectorXcd characteristic_polynomial(const Eigen::MatrixXcd& a) {
    const Index n = a.rows();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    c(n) = 1.0;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = a * m + c(n - k + 1) * id;
        c(n - k) = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

Eigen::VectorXcd polynomial_roots(const Eigen::VectorXcd& coeffs, int max_iterations) {
    const Index n = coeffs.size() - 1;
    if (n < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
    const Eigen::VectorXcd monic = coeffs / coeffs(n);
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = monic(n);
        for (Index i = n - 1; i >= 0; --i) acc = acc * z + monic(i);
        return acc;
    };
    Eigen::VectorXcd z(n);
    const std::complex<double> seed(0.4, 0.9);
    for (Index i = 0; i < n; ++i) z(i) = std::pow(seed, static_cast<double>(i));
    for (int it = 0; it < max_iterations; ++it) {
        double change = 0.0;
        for (Index i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (Index j = 0; j < n; ++j) {
                if (j != i) denom *= z(i) - z(j);
            }
            const std::complex<double> delta = eval(z(i)) / denom;
            z(i) -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-15) break;
    }
    return z;
}

Eigen::VectorXd charpoly_phases(const Eigen::MatrixXcd& a) {
    const Eigen::VectorXcd roots = polynomial_roots(characteristic_polynomial(a));
    Eigen::VectorXd out(roots.size());
    for (Index i = 0; i < roots.size(); ++i) out(i) = std::arg(roots(i));
    return out;
}

std::vector<std::vector<Index>> permutation_cycles(const Eigen::MatrixXcd& p) {
    const Index n = p.cols();
    std::vector<Index> image(static_cast<std::size_t>(n), -1);
    for (Index c = 0; c < n; ++c) {
        for (Index r = 0; r < n; ++r) {
            const std::complex<double> v = p(r, c);
            if (v == std::complex<double>(1.0, 0.0)) {
                if (image[static_cast<std::size_t>(c)] != -1) throw std::invalid_argument("not a permutation");
                image[static_cast<std::size_t>(c)] = r;
            } else if (v != std::complex<double>(0.0, 0.0)) {
                throw std::invalid_argument("not a 0/1 matrix");
            }
        }
        if (image[static_cast<std::size_t>(c)] == -1) throw std::invalid_argument("empty column");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<Index>> cycles;
    for (Index start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<Index> cycle;
        for (Index c = start; !seen[static_cast<std::size_t>(c)]; c = image[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = true;
            cycle.push_back(c);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::pair<int, Spin> kind1_image(const Grid1D& g, int site, Spin s) {
    if (s == Spin::Up) {
        if (site == g.n_right()) return {site, Spin::Down};
        return {site + 1, Spin::Up};
    }
    if (site == g.n_left()) return {site, Spin::Up};
    return {site - 1, Spin::Down};
}

std::pair<int, Spin> kind2_image(const Grid1D& g, int site, Spin s) {
    const int p_i = g.n_left();
    const int p_d = g.n_right() - 1;
    const int i_i = g.n_left() + 1;
    const int i_d = g.n_right();
    const bool even = ((site - p_i) % 2) == 0;
    if (even && s == Spin::Up) return {site == p_d ? i_d : site + 2, s};
    if (even && s == Spin::Down) return {site == p_i ? i_i : site - 2, s};
    if (!even && s == Spin::Up) return {site == i_i ? p_i : site - 2, s};
    return {site == i_d ? p_d : site + 2, s};
}

Eigen::VectorXd roots_of_unity_phases(int n) {
    std::vector<double> v;
    for (int j = 0; j < n; ++j) {
        double p = 2.0 * std::numbers::pi * j / n;
        if (p > std::numbers::pi + 1e-12) p -= 2.0 * std::numbers::pi;
        v.push_back(p);
    }
    std::sort(v.begin(), v.end());
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Index>(v.size()));
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    const int n = intervals + (intervals % 2);
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

std::vector<double> drop_largest_by_sort(const std::vector<double>& raw, int g) {
    std::vector<std::pair<double, std::size_t>> tagged;
    for (std::size_t i = 0; i < raw.size(); ++i) tagged.emplace_back(raw[i], i);
    std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    std::vector<bool> drop(raw.size(), false);
    for (int i = 0; i < g && i < static_cast<int>(tagged.size()); ++i) drop[tagged[static_cast<std::size_t>(i)].second] = true;
    std::vector<double> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!drop[i]) out.push_back(raw[i]);
    }
    return out;
}

}  // namespace qwb::reference
