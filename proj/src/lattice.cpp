#include "qwb/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace qwb {

Grid1D::Grid1D(int n_left, int n_right) : n_left_(n_left), n_right_(n_right) {
    if (n_left >= n_right) {
        throw std::invalid_argument("Grid1D: n_left must be < n_right (got " + std::to_string(n_left) +
                                    ", " + std::to_string(n_right) + ")");
    }
}

Kind2Grid::Kind2Grid(int even_left, int even_right, int odd_left, int odd_right)
    : even_left_(even_left), even_right_(even_right), odd_left_(odd_left), odd_right_(odd_right) {
    if (((even_right - even_left) % 2) != 0) {
        throw std::invalid_argument("Kind2Grid: even_left and even_right must share parity");
    }
    if (odd_left != even_left + 1 || odd_right != even_right + 1) {
        throw std::invalid_argument("Kind2Grid: sublattices are not interleaved");
    }
    if (even_right - even_left < 2) {
        throw std::invalid_argument("Kind2Grid: each sublattice needs at least two sites");
    }
}

Kind2Grid Kind2Grid::over(const Grid1D& grid) {
    if (grid.size() % 2 != 0) {
        throw std::invalid_argument("Kind2Grid: total site count must be even (got " +
                                    std::to_string(grid.size()) + ")");
    }
    return Kind2Grid(grid.n_left(), grid.n_right() - 1, grid.n_left() + 1, grid.n_right());
}

std::string_view path_name(PathTag tag) noexcept {
    switch (tag) {
        case PathTag::Line: return "line";
        case PathTag::Sin: return "sin";
        case PathTag::Cos: return "cos";
        case PathTag::Cosh: return "cosh";
        case PathTag::Tanh: return "tanh";
        case PathTag::Custom: return "custom";
    }
    return "custom";
}

PathTag parse_path_tag(std::string_view name) {
    for (PathTag tag : {PathTag::Line, PathTag::Sin, PathTag::Cos, PathTag::Cosh, PathTag::Tanh}) {
        if (name == path_name(tag)) return tag;
    }
    throw std::invalid_argument("unknown path '" + std::string(name) +
                                "' (expected line, sin, cos, cosh or tanh)");
}

PathFunction::PathFunction(PathTag tag) : tag_(tag), name_(path_name(tag)) {
    switch (tag) {
        case PathTag::Line: f_ = [](double a) { return a; }; break;
        case PathTag::Sin: f_ = [](double a) { return std::sin(a); }; break;
        case PathTag::Cos: f_ = [](double a) { return std::cos(a); }; break;
        case PathTag::Cosh: f_ = [](double a) { return std::cosh(a); }; break;
        case PathTag::Tanh: f_ = [](double a) { return std::tanh(a); }; break;
        case PathTag::Custom:
            throw std::invalid_argument("PathFunction: use PathFunction::custom for custom paths");
    }
}

PathFunction PathFunction::custom(std::string name, std::function<double(double)> f) {
    if (!f) throw std::invalid_argument("PathFunction: empty evaluator");
    PathFunction p;
    p.tag_ = PathTag::Custom;
    p.name_ = std::move(name);
    p.f_ = std::move(f);
    return p;
}

CurvedPath::CurvedPath(PathFunction path, double alpha_left, double alpha_right, double step)
    : path_(std::move(path)), alpha_left_(alpha_left), alpha_right_(alpha_right), step_(step), count_(0) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("CurvedPath: step must be positive");
    }
    const double intervals = (alpha_right - alpha_left) / step;
    const double rounded = std::round(intervals);
    if (!(rounded >= 1.0) || std::abs(intervals - rounded) > 1e-9 * std::max(1.0, rounded)) {
        throw std::invalid_argument("CurvedPath: (alpha_right - alpha_left)/step must be a positive integer");
    }
    count_ = static_cast<int>(rounded) + 1;
}

CurvedPath CurvedPath::straight(const Grid1D& grid) {
    return CurvedPath(PathFunction(PathTag::Line), grid.n_left(), grid.n_right(), 1.0);
}

Grid1D CurvedPath::grid() const {
    const double start = alpha_left_ / step_;
    const double rounded = std::round(start);
    const int n_left = (std::abs(start - rounded) <= 1e-9 * std::max(1.0, std::abs(rounded)))
                           ? static_cast<int>(rounded)
                           : 0;
    return Grid1D(n_left, n_left + count_ - 1);
}

std::vector<PathPoint> CurvedPath::coordinates() const {
    std::vector<PathPoint> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int j = 0; j < count_; ++j) {
        const double a = alpha(j);
        out.push_back({path_(a), a});
    }
    return out;
}

SpinorState::SpinorState(Grid1D grid, Eigen::VectorXcd amplitudes)
    : grid_(grid), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != grid_.dim()) {
        throw std::invalid_argument("SpinorState: amplitude vector has length " +
                                    std::to_string(amplitudes_.size()) + ", expected " +
                                    std::to_string(grid_.dim()));
    }
}

SpinorState make_delta_state(const Grid1D& grid, int site, Complex up, Complex down) {
    if (!grid.contains(site)) {
        throw std::out_of_range("make_delta_state: site " + std::to_string(site) + " outside [" +
                                std::to_string(grid.n_left()) + ", " + std::to_string(grid.n_right()) + "]");
    }
    const double norm = std::sqrt(std::norm(up) + std::norm(down));
    if (norm == 0.0) throw std::invalid_argument("make_delta_state: spin weights are both zero");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(grid.dim());
    amp(grid.index(site, Spin::Up)) = up / norm;
    amp(grid.index(site, Spin::Down)) = down / norm;
    return SpinorState(grid, std::move(amp));
}

SpinorState default_initial_state(const Grid1D& grid) {
    return make_delta_state(grid, grid.central_site(), Complex(1.0, 0.0), Complex(0.0, 1.0));
}

double state_norm(const SpinorState& state) { return state.amplitudes().norm(); }

std::vector<SiteProbability> probability_profile(const SpinorState& state) {
    const Grid1D& g = state.grid();
    std::vector<SiteProbability> out;
    out.reserve(static_cast<std::size_t>(g.size()));
    for (int x = g.n_left(); x <= g.n_right(); ++x) {
        out.push_back({x, std::norm(state.amplitude(x, Spin::Up)) + std::norm(state.amplitude(x, Spin::Down))});
    }
    return out;
}

}  // namespace qwb
