// 2-D billiards as tensor products of two 1-D walks.

#pragma once

#include "qwb/spectrum.hpp"
#include "qwb/walk.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <optional>
#include <stdexcept>

namespace qwb {

// One factor of the product. With `bloch` set the factor is the Bloch
// matrix at those K values (the spectrum slice), otherwise the direct step
// operator.
struct FactorSpec {
    BilliardSpec billiard;
    std::optional<BlochParams> bloch;
};

Eigen::MatrixXcd factor_matrix(const FactorSpec& factor);

struct Billiard2DSpec {
    FactorSpec left;   // angle Θ₁
    FactorSpec right;  // angle Θ₂
    Index dim_cap = 4096;
};

class DimensionCapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

template <typename DerivedA, typename DerivedB>
auto kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    return Eigen::kroneckerProduct(a.derived(), b.derived());
}

// U₁ ⊗ U₂. Throws DimensionCapExceeded above spec.dim_cap.
UnitaryOperator tensor_operator(const Billiard2DSpec& spec);

// { wrap(φᵢ + ψⱼ) } sorted; never materializes the product.
SpectrumResult tensor_spectrum(const SpectrumResult& left, const SpectrumResult& right, int threads = 1);
SpectrumResult tensor_spectrum(const Billiard2DSpec& spec, int threads = 1);

std::string describe(const FactorSpec& factor);

}  // namespace qwb
