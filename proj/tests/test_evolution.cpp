#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwb/evolution.hpp"

#include <numbers>
#include <sstream>

using namespace qwb;

namespace {

constexpr double pi = std::numbers::pi;

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("single steps") {
    const Grid1D g(-2, 2);
    const SpinorState delta = make_delta_state(g, 0, 1.0, 0.0);

    UnitaryOperator id{Eigen::MatrixXcd::Identity(10, 10), "identity", {}};
    CHECK(step(delta, id).amplitudes() == delta.amplitudes());

    const SpinorState moved = step(delta, kind1_shift(g));
    CHECK(moved.amplitude(1, Spin::Up) == Complex(1.0, 0.0));

    const BilliardSpec spec = make_billiard(BilliardKind::One, 5, 0.0);
    const SpinorState wall = step(make_delta_state(g, 2, 1.0, 0.0), compose_step(spec));
    CHECK(wall.amplitude(2, Spin::Down) == Complex(1.0, 0.0));

    UnitaryOperator wrong{Eigen::MatrixXcd::Identity(8, 8), "small", {}};
    CHECK_THROWS_AS(step(delta, wrong), std::invalid_argument);
}

TEST_CASE("zero steps keep the initial profile") {
    const BilliardSpec spec = make_billiard(BilliardKind::One, 7, pi / 4);
    const SpinorState s = default_initial_state(spec.grid());
    const EvolutionRecord rec = run(spec, s, 0);
    REQUIRE(rec.frames.size() == 1);
    CHECK(rec.frames[0][3] == doctest::Approx(1.0));
    CHECK_THROWS_AS(run(spec, s, -1), std::invalid_argument);
    CHECK_THROWS_AS(run(spec, default_initial_state(Grid1D(0, 3)), 2), std::invalid_argument);
}

TEST_CASE("theta = 0 returns after 2N steps") {
    for (int n : {2, 3, 5, 8}) {
        const BilliardSpec spec = make_billiard(BilliardKind::One, n, 0.0);
        const Grid1D g = spec.grid();
        const SpinorState s = make_delta_state(g, g.n_left(), 0.6, Complex(0.0, 0.8));
        RunOptions o;
        o.keep_amplitudes = true;
        const EvolutionRecord rec = run(spec, s, 2 * n, o);
        CHECK(max_diff(rec.amplitudes.back(), s.amplitudes()) == 0.0);
        for (int t = 1; t < 2 * n; ++t) CHECK(max_diff(rec.amplitudes[static_cast<std::size_t>(t)], s.amplitudes()) > 0.1);
    }
}

TEST_CASE("71-site walk conserves probability") {
    const BilliardSpec spec = make_billiard(BilliardKind::One, 71, pi / 4);
    CHECK(spec.grid() == Grid1D(-35, 35));
    const EvolutionRecord rec = run(spec, default_initial_state(spec.grid()), 70);
    REQUIRE(rec.frames.size() == 71);
    for (const auto& f : rec.frames) {
        REQUIRE(f.size() == 71);
        double total = 0.0;
        for (double p : f) total += p;
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("matrix-free kernel agrees with the dense operator") {
    for (BilliardKind kind : {BilliardKind::One, BilliardKind::Two}) {
        for (OperatorOrder order : {OperatorOrder::ShiftThenCoin, OperatorOrder::CoinThenShift}) {
            BilliardSpec spec = make_billiard(kind, 10, 0.7, PathTag::Cos, 1.0);
            spec.order = order;
            spec.electric.origin = 2;
            const SpinorState s = make_delta_state(spec.grid(), 1, 1.0, Complex(0.5, -0.5));
            const Eigen::VectorXcd dense = compose_step(spec).matrix * s.amplitudes();
            CHECK(max_diff(StepKernel(spec).apply(s.amplitudes()), dense) < 1e-15);

            RunOptions fast;
            fast.matrix_free = true;
            fast.keep_amplitudes = true;
            RunOptions slow;
            slow.keep_amplitudes = true;
            const EvolutionRecord a = run(spec, s, 25, fast);
            const EvolutionRecord b = run(spec, s, 25, slow);
            CHECK(max_diff(a.amplitudes.back(), b.amplitudes.back()) < 1e-13);
        }
    }
}

TEST_CASE("adjoint undoes the evolution") {
    const BilliardSpec spec = make_billiard(BilliardKind::Two, 12, 1.1, PathTag::Sin, pi);
    const SpinorState s = default_initial_state(spec.grid());
    RunOptions o;
    o.keep_amplitudes = true;
    const EvolutionRecord rec = run(spec, s, 40, o);
    const Eigen::MatrixXcd ud = compose_step(spec).matrix.adjoint();
    Eigen::VectorXcd v = rec.amplitudes.back();
    for (int t = 0; t < 40; ++t) v = ud * v;
    CHECK(max_diff(v, s.amplitudes()) < 1e-10);
}

TEST_CASE("evolution csv") {
    const BilliardSpec spec = make_billiard(BilliardKind::One, 4, pi / 4);
    const EvolutionRecord rec = run(spec, default_initial_state(spec.grid()), 3);
    std::ostringstream os;
    write_csv(os, rec);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,site,probability");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4 * 4);
    CHECK(os.str().find("\n0,-1,0\n") != std::string::npos);
}
