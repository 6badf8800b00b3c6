#include "qwb/walk.hpp"

#include <sstream>
#include <stdexcept>

namespace qwb {

namespace {

UnitaryOperator permutation_operator(const std::vector<Index>& perm, std::string label) {
    const Index dim = static_cast<Index>(perm.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Index c = 0; c < dim; ++c) m(perm[static_cast<std::size_t>(c)], c) = 1.0;
    return {std::move(m), std::move(label), {}};
}

std::vector<Index> kind1_permutation(const Grid1D& g) {
    std::vector<Index> perm(static_cast<std::size_t>(g.dim()));
    for (int n = g.n_left(); n <= g.n_right(); ++n) {
        const auto up = static_cast<std::size_t>(g.index(n, Spin::Up));
        const auto down = static_cast<std::size_t>(g.index(n, Spin::Down));
        perm[up] = (n < g.n_right()) ? g.index(n + 1, Spin::Up) : g.index(n, Spin::Down);
        perm[down] = (n > g.n_left()) ? g.index(n - 1, Spin::Down) : g.index(n, Spin::Up);
    }
    return perm;
}

std::vector<Index> kind2_permutation(const Kind2Grid& k2) {
    const Grid1D g = k2.grid();
    std::vector<Index> perm(static_cast<std::size_t>(g.dim()));
    for (int n = g.n_left(); n <= g.n_right(); ++n) {
        const auto up = static_cast<std::size_t>(g.index(n, Spin::Up));
        const auto down = static_cast<std::size_t>(g.index(n, Spin::Down));
        if (k2.on_even(n)) {
            perm[up] = g.index(n == k2.even_right() ? k2.odd_right() : n + 2, Spin::Up);
            perm[down] = g.index(n == k2.even_left() ? k2.odd_left() : n - 2, Spin::Down);
        } else {
            perm[up] = g.index(n == k2.odd_left() ? k2.even_left() : n - 2, Spin::Up);
            perm[down] = g.index(n == k2.odd_right() ? k2.even_right() : n + 2, Spin::Down);
        }
    }
    return perm;
}

std::string grid_label(const Grid1D& g) {
    return "[" + std::to_string(g.n_left()) + "," + std::to_string(g.n_right()) + "]";
}

}  // namespace

BilliardKind parse_kind(int kind) {
    if (kind == 1) return BilliardKind::One;
    if (kind == 2) return BilliardKind::Two;
    throw std::invalid_argument("billiard kind must be 1 or 2 (got " + std::to_string(kind) + ")");
}

UnitaryOperator kind1_shift(const Grid1D& grid) {
    return permutation_operator(kind1_permutation(grid), "kind1_shift" + grid_label(grid));
}

UnitaryOperator kind2_shift(const Kind2Grid& grid) {
    return permutation_operator(kind2_permutation(grid), "kind2_shift" + grid_label(grid.grid()));
}

std::vector<Index> shift_permutation(const Grid1D& grid, BilliardKind kind) {
    return kind == BilliardKind::One ? kind1_permutation(grid) : kind2_permutation(Kind2Grid::over(grid));
}

UnitaryOperator curved_shift(const CurvedPath& path, BilliardKind kind) {
    const Grid1D g = path.grid();
    UnitaryOperator op = kind == BilliardKind::One ? kind1_shift(g) : kind2_shift(Kind2Grid::over(g));
    op.label = std::string(path.path().name()) + "_" + op.label;
    op.coordinates = path.coordinates();
    return op;
}

UnitaryOperator electric_phase(const Grid1D& grid, const ElectricField& field) {
    Eigen::VectorXcd diag(grid.dim());
    for (int x = grid.n_left(); x <= grid.n_right(); ++x) {
        const Complex e = std::polar(1.0, field.phi * static_cast<double>(x - field.origin));
        diag(grid.index(x, Spin::Up)) = e;
        diag(grid.index(x, Spin::Down)) = e;
    }
    return {diag.asDiagonal().toDenseMatrix(), "electric_phase" + grid_label(grid), {}};
}

UnitaryOperator coin_operator(const Grid1D& grid, double theta) {
    const Eigen::Matrix2cd c = coin_matrix(theta);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(grid.dim(), grid.dim());
    for (Index s = 0; s < grid.size(); ++s) m.block<2, 2>(2 * s, 2 * s) = c;
    return {std::move(m), "coin" + grid_label(grid), {}};
}

void BilliardSpec::validate() const {
    const Grid1D g = grid();
    if (kind == BilliardKind::Two) Kind2Grid::over(g);
    if (!std::isfinite(theta)) throw std::invalid_argument("BilliardSpec: theta must be finite");
    if (!std::isfinite(electric.phi)) throw std::invalid_argument("BilliardSpec: phi must be finite");
}

std::string BilliardSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << path.path().name() << " kind " << static_cast<int>(kind) << " sites " << path.point_count()
       << " theta " << theta;
    if (electric.phi != 0.0) os << " phi " << electric.phi << " origin " << electric.origin;
    if (order == OperatorOrder::CoinThenShift) os << " coin-shift";
    return os.str();
}

BilliardSpec make_billiard(BilliardKind kind, int sites, double theta, PathTag path, double phi) {
    if (sites < 2) throw std::invalid_argument("make_billiard: need at least two sites");
    const int left = -(sites - 1) / 2;
    // Custom paths have no default evaluator.
    const PathFunction f = path == PathTag::Custom ? PathFunction(PathTag::Line) : PathFunction(path);
    BilliardSpec spec;
    spec.kind = kind;
    spec.path = CurvedPath(f, left, left + sites - 1, 1.0);
    spec.theta = theta;
    spec.electric.phi = phi;
    spec.validate();
    return spec;
}

UnitaryOperator compose_step(const BilliardSpec& spec) {
    spec.validate();
    const Grid1D g = spec.grid();
    const UnitaryOperator shift = curved_shift(spec.path, spec.kind);
    const UnitaryOperator coin = coin_operator(g, spec.theta);

    UnitaryOperator out;
    out.coordinates = shift.coordinates;
    out.label = spec.describe();
    if (spec.order == OperatorOrder::ShiftThenCoin) {
        out.matrix = shift.matrix * coin.matrix;
    } else {
        out.matrix = coin.matrix * shift.matrix;
    }
    if (spec.electric.phi != 0.0) {
        out.matrix = electric_phase(g, spec.electric).matrix * out.matrix;
    }
    return out;
}

double verify_unitarity(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("verify_unitarity: matrix is not square");
    const Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

}  // namespace qwb
