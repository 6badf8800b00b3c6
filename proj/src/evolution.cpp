#include "qwb/evolution.hpp"

#include "qwb/format.hpp"

#include <ostream>
#include <stdexcept>

namespace qwb {

namespace {

std::vector<double> profile_of(const Grid1D& g, const Eigen::VectorXcd& amp) {
    std::vector<double> p(static_cast<std::size_t>(g.size()));
    for (Index j = 0; j < g.size(); ++j) p[static_cast<std::size_t>(j)] = std::norm(amp(2 * j)) + std::norm(amp(2 * j + 1));
    return p;
}

}  // namespace

SpinorState step(const SpinorState& state, const UnitaryOperator& op) {
    if (op.matrix.rows() != state.grid().dim() || op.matrix.cols() != state.grid().dim()) {
        throw std::invalid_argument("step: operator is " + std::to_string(op.matrix.rows()) + "x" +
                                    std::to_string(op.matrix.cols()) + ", state has dimension " +
                                    std::to_string(state.grid().dim()));
    }
    return SpinorState(state.grid(), op.matrix * state.amplitudes());
}

StepKernel::StepKernel(const BilliardSpec& spec)
    : coin_(coin_matrix(spec.theta)), perm_(), phase_(), order_(spec.order) {
    spec.validate();
    const Grid1D g = spec.grid();
    perm_ = shift_permutation(g, spec.kind);
    if (spec.electric.phi != 0.0) phase_ = electric_phase(g, spec.electric).matrix.diagonal();
}

void StepKernel::apply_coin(Eigen::VectorXcd& v) const {
    for (Index j = 0; j + 1 < v.size(); j += 2) {
        const Eigen::Vector2cd pair = coin_ * v.segment<2>(j);
        v.segment<2>(j) = pair;
    }
}

void StepKernel::apply_shift(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out.resize(in.size());
    for (std::size_t c = 0; c < perm_.size(); ++c) out(perm_[c]) = in(static_cast<Index>(c));
}

void StepKernel::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    if (in.size() != dim()) throw std::invalid_argument("StepKernel::apply: dimension mismatch");
    if (order_ == OperatorOrder::ShiftThenCoin) {
        Eigen::VectorXcd tmp = in;
        apply_coin(tmp);
        apply_shift(tmp, out);
    } else {
        apply_shift(in, out);
        apply_coin(out);
    }
    if (phase_.size() != 0) out = phase_.cwiseProduct(out);
}

Eigen::VectorXcd StepKernel::apply(const Eigen::VectorXcd& in) const {
    Eigen::VectorXcd out;
    apply(in, out);
    return out;
}

EvolutionRecord run(const BilliardSpec& spec, const SpinorState& initial, int steps, RunOptions options) {
    if (steps < 0) throw std::invalid_argument("run: steps must be >= 0");
    spec.validate();
    const Grid1D g = spec.grid();
    if (!(initial.grid() == g)) throw std::invalid_argument("run: initial state lives on a different grid");

    EvolutionRecord rec;
    rec.spec = spec;
    rec.steps = steps;
    rec.frames.reserve(static_cast<std::size_t>(steps) + 1);

    Eigen::VectorXcd psi = initial.amplitudes();
    Eigen::VectorXcd next(psi.size());
    auto record = [&](const Eigen::VectorXcd& v) {
        rec.frames.push_back(profile_of(g, v));
        if (options.keep_amplitudes) rec.amplitudes.push_back(v);
    };
    record(psi);

    if (options.matrix_free) {
        const StepKernel kernel(spec);
        for (int t = 0; t < steps; ++t) {
            kernel.apply(psi, next);
            psi.swap(next);
            record(psi);
        }
    } else {
        const Eigen::MatrixXcd u = compose_step(spec).matrix;
        for (int t = 0; t < steps; ++t) {
            next.noalias() = u * psi;
            psi.swap(next);
            record(psi);
        }
    }
    return rec;
}

void write_csv(std::ostream& os, const EvolutionRecord& record) {
    const Grid1D g = record.spec.grid();
    os << "t,site,probability\n";
    for (std::size_t t = 0; t < record.frames.size(); ++t) {
        const auto& frame = record.frames[t];
        for (std::size_t j = 0; j < frame.size(); ++j) {
            os << t << ',' << g.n_left() + static_cast<int>(j) << ',' << format_double(frame[j]) << '\n';
        }
    }
}

}  // namespace qwb
