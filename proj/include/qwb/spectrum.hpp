// Quasi-energy spectra of one-step operators.
//
// Two routes: direct diagonalization of a materialized operator, and the
// plane-wave (Bloch) matrices in which every hop between neighbouring sites
// picks up a phase: e^{+ik} on hops that arrive from the right-hand
// neighbour, e^{−ik} on hops from the left. Bounces stay bare. Both kinds
// and any number of sites are supported.

#pragma once

#include "qwb/lattice.hpp"
#include "qwb/walk.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwb {

// Raised when a numerical post-condition fails (non-unitary input, eigenvalue
// modulus drift).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kUnitarityRejectTol = 1e-8;

// Principal branch (−π, π]; anything within 1e-12 of −π becomes +π.
template <typename Scalar>
Scalar wrap_phase(Scalar phi) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar r = std::remainder(phi, Scalar(2) * pi);
    if (r <= -pi + Scalar(1e-12)) r = pi;
    return r;
}

struct SpectrumResult {
    Eigen::VectorXd phases;         // ascending, on (−π, π]
    Eigen::VectorXcd eigenvalues;   // same order as phases
    std::string source;

    Index size() const noexcept { return phases.size(); }
};

// Rejects inputs with ‖U†U − I‖_max > 1e-8 and any eigenvalue whose modulus
// drifts from 1 by more than 1e-8. Throws NumericalError.
SpectrumResult eigenphases(const Eigen::MatrixXcd& op, std::string source = "direct");
SpectrumResult eigenphases(const UnitaryOperator& op);

// Wraps, sorts and attaches e^{iφ}.
SpectrumResult spectrum_from_phases(std::vector<double> phases, std::string source);

// Largest circular distance between two phase multisets after matching
// sorted entries; +inf when the sizes differ.
double phase_multiset_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

enum class BlochVariant { Literal, PlaneWaveConsistent };

// Coin: d-out rows use the coin's second row (−sin θ, cos θ), so k = 0
// reproduces compose_step. Printed: the d-out rows carry (sin θ, −cos θ),
// i.e. S·Coin with S = −1 on every row fed by a down component.
enum class BlochSigns { Coin, Printed };

struct BlochParams {
    double k = 0.0;       // bare quasi-momentum (straight-line matrices)
    double k_path = 0.0;  // K_f, conjugate to f(α)
    double k_alpha = 0.0; // K_α, conjugate to α
    double alpha = 0.0;   // slice coordinate
    BlochVariant variant = BlochVariant::Literal;
    BlochSigns signs = BlochSigns::Coin;
};

// Factors on the phased hops: from_right multiplies hops arriving from the
// right-hand neighbour (left-movers, the e^{+ik} slots), from_left those
// arriving from the left-hand neighbour (e^{−ik} slots).
struct HopPhases {
    Complex from_right{1.0, 0.0};
    Complex from_left{1.0, 0.0};
};

// W(phases)·C over `grid`; bounces (kind 1) and wall transfers (kind 2) stay bare.
Eigen::MatrixXcd bloch_matrix(double theta, const Grid1D& grid, BilliardKind kind, const HopPhases& hops,
                              BlochSigns signs = BlochSigns::Coin);

Eigen::MatrixXcd bloch_kind1(double theta, double k, int sites, BlochSigns signs = BlochSigns::Coin);
Eigen::MatrixXcd bloch_kind2(double theta, double k, int sites, BlochSigns signs = BlochSigns::Coin);

// Literal, with Δ∓ = f(α ∓ step) − f(α):
//   from_right = e^{i k_path} e^{i Δ−} e^{+i k_alpha}
//   from_left  = e^{i k_path} e^{i Δ+} e^{−i k_alpha}
// PlaneWaveConsistent, from ψ ∝ e^{i K_f f(α)} e^{i K_α α} with hop length h
// (step for kind 1, 2·step for kind 2):
//   from_right = e^{i k_path [f(α+h) − f(α)]} e^{+i k_alpha h}
//   from_left  = e^{i k_path [f(α−h) − f(α)]} e^{−i k_alpha h}
HopPhases substitution_phases(const BlochParams& params, const CurvedPath& path, BilliardKind kind);

Eigen::MatrixXcd bloch_curved(double theta, const BlochParams& params, const CurvedPath& path, BilliardKind kind);

struct DispersionTable {
    std::vector<double> k;
    std::vector<Eigen::VectorXd> phases;  // sorted per sample
};

// Samples k on the inclusive grid k_min..k_max; evaluation may run on
// `threads` workers, output order is by sample index.
DispersionTable dispersion_scan(const std::function<Eigen::MatrixXcd(double)>& builder, double k_min,
                                double k_max, int resolution, int threads = 1);

// `index,re,im,phase`
void write_csv(std::ostream& os, const SpectrumResult& spectrum);
// `k,band_index,phase`
void write_csv(std::ostream& os, const DispersionTable& table);

}  // namespace qwb
