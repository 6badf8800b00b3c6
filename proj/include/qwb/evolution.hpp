// Repeated application of the step operator.

#pragma once

#include "qwb/lattice.hpp"
#include "qwb/walk.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace qwb {

// |ψ(t+1)> = U|ψ(t)>. Throws std::invalid_argument on a dimension mismatch.
SpinorState step(const SpinorState& state, const UnitaryOperator& op);

// Applies E·W·C (or E·C·W) without materializing the dense operator:
// a 2×2 coin per site, an index permutation, then a diagonal phase.
class StepKernel {
  public:
    explicit StepKernel(const BilliardSpec& spec);

    Index dim() const noexcept { return static_cast<Index>(perm_.size()); }
    void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

  private:
    void apply_coin(Eigen::VectorXcd& v) const;
    void apply_shift(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;

    Eigen::Matrix2cd coin_;
    std::vector<Index> perm_;
    Eigen::VectorXcd phase_;  // empty when there is no electric field
    OperatorOrder order_;
};

struct RunOptions {
    bool keep_amplitudes = false;
    bool matrix_free = false;
};

struct EvolutionRecord {
    BilliardSpec spec;
    int steps = 0;
    // frames[t][j] is the probability at site n_left + j.
    std::vector<std::vector<double>> frames;
    // Full states per frame; only filled with RunOptions::keep_amplitudes.
    std::vector<Eigen::VectorXcd> amplitudes;
};

EvolutionRecord run(const BilliardSpec& spec, const SpinorState& initial, int steps, RunOptions options = {});

// Header `t,site,probability`, t-major rows, 17 significant digits.
void write_csv(std::ostream& os, const EvolutionRecord& record);

}  // namespace qwb
