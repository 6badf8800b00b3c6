// One-step operators of the billiard walks.
//
// The evolution is U = E·W·C: coin on every site's spin pair, then the
// bounce-aware shift, then an optional electric phase. Shift matrices are
// 0/1 permutations in the site-major, spin-minor basis of lattice.hpp.

#pragma once

#include "qwb/lattice.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace qwb {

// [[cos θ, sin θ], [−sin θ, cos θ]]
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> coin_matrix(Scalar theta) {
    using std::cos;
    using std::sin;
    const Scalar c = cos(theta);
    const Scalar s = sin(theta);
    Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
    m << c, s, -s, c;
    return m;
}

struct ElectricField {
    double phi = 0.0;  // phase per unit site coordinate
    int origin = 0;    // site where the phase vanishes
};

struct UnitaryOperator {
    Eigen::MatrixXcd matrix;
    std::string label;
    std::vector<PathPoint> coordinates;  // (f(α), α) per site for curved paths

    Index dim() const noexcept { return matrix.rows(); }
};

enum class BilliardKind : int { One = 1, Two = 2 };

enum class OperatorOrder { ShiftThenCoin, CoinThenShift };

BilliardKind parse_kind(int kind);  // throws std::invalid_argument

// Unit hops; at a wall the walker stays put and flips its spin.
UnitaryOperator kind1_shift(const Grid1D& grid);

// Two-unit hops on interleaved sublattices; a wall hop moves one site and
// swaps sublattice, spin is conserved.
UnitaryOperator kind2_shift(const Kind2Grid& grid);

// Same 0/1 matrix as the straight-line shift over the α-index grid, with the
// (f(α), α) labels attached.
UnitaryOperator curved_shift(const CurvedPath& path, BilliardKind kind);

// diag exp(i·phi·(x − origin)) on both spin components of site x.
UnitaryOperator electric_phase(const Grid1D& grid, const ElectricField& field);

// coin_matrix(theta) on every site.
UnitaryOperator coin_operator(const Grid1D& grid, double theta);

// Image index of every basis column under the shift; shift = Σ |perm[c]><c|.
std::vector<Index> shift_permutation(const Grid1D& grid, BilliardKind kind);

struct BilliardSpec {
    BilliardKind kind = BilliardKind::One;
    CurvedPath path = CurvedPath::straight(Grid1D(-2, 2));
    double theta = 0.0;
    ElectricField electric{};
    OperatorOrder order = OperatorOrder::ShiftThenCoin;

    Grid1D grid() const { return path.grid(); }

    // Throws std::invalid_argument on a kind/grid mismatch.
    void validate() const;
    std::string describe() const;
};

BilliardSpec make_billiard(BilliardKind kind, int sites, double theta, PathTag path = PathTag::Line,
                           double phi = 0.0);

UnitaryOperator compose_step(const BilliardSpec& spec);

// ‖U†U − I‖_max
double verify_unitarity(const Eigen::MatrixXcd& m);
inline double verify_unitarity(const UnitaryOperator& op) { return verify_unitarity(op.matrix); }

}  // namespace qwb
