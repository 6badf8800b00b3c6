#include "qwb/billiard2d.hpp"

#include "qwb/format.hpp"
#include "qwb/parallel.hpp"

#include <algorithm>

namespace qwb {

Eigen::MatrixXcd factor_matrix(const FactorSpec& factor) {
    if (!factor.bloch) return compose_step(factor.billiard).matrix;
    const BilliardSpec& b = factor.billiard;
    b.validate();
    Eigen::MatrixXcd m = bloch_curved(b.theta, *factor.bloch, b.path, b.kind);
    if (b.electric.phi != 0.0) {
        // Bloch matrices index sites from 0; the field sees the physical coordinates.
        const Eigen::VectorXcd phase = electric_phase(b.grid(), b.electric).matrix.diagonal();
        m = phase.asDiagonal() * m;
    }
    return m;
}

std::string describe(const FactorSpec& factor) {
    std::string s = factor.billiard.describe();
    if (factor.bloch) {
        const BlochParams& p = *factor.bloch;
        s += " bloch " + std::string(p.variant == BlochVariant::Literal ? "literal" : "plane-wave") +
             " k_path " + format_double(p.k_path) + " k_alpha " + format_double(p.k_alpha) + " alpha " +
             format_double(p.alpha);
    }
    return s;
}

UnitaryOperator tensor_operator(const Billiard2DSpec& spec) {
    const Eigen::MatrixXcd a = factor_matrix(spec.left);
    const Eigen::MatrixXcd b = factor_matrix(spec.right);
    const Index dim = a.rows() * b.rows();
    if (dim > spec.dim_cap) {
        throw DimensionCapExceeded("tensor_operator: product dimension " + std::to_string(dim) +
                                   " exceeds the cap of " + std::to_string(spec.dim_cap) +
                                   "; use tensor_spectrum, which works from the factor spectra");
    }
    UnitaryOperator op;
    op.matrix = kronecker(a, b);
    op.label = "(" + describe(spec.left) + ") x (" + describe(spec.right) + ")";
    return op;
}

SpectrumResult tensor_spectrum(const SpectrumResult& left, const SpectrumResult& right, int threads) {
    const Index n1 = left.size();
    const Index n2 = right.size();
    std::vector<double> sums(static_cast<std::size_t>(n1 * n2));
    parallel_for(n1, threads, [&](Index i) {
        for (Index j = 0; j < n2; ++j) {
            sums[static_cast<std::size_t>(i * n2 + j)] = wrap_phase(left.phases(i) + right.phases(j));
        }
    });
    return spectrum_from_phases(std::move(sums), "sumset: (" + left.source + ") x (" + right.source + ")");
}

SpectrumResult tensor_spectrum(const Billiard2DSpec& spec, int threads) {
    const SpectrumResult a = eigenphases(factor_matrix(spec.left), describe(spec.left));
    const SpectrumResult b = eigenphases(factor_matrix(spec.right), describe(spec.right));
    return tensor_spectrum(a, b, threads);
}

}  // namespace qwb
