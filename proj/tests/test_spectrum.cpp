#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwb/reference.hpp"
#include "qwb/spectrum.hpp"

#include <numbers>
#include <random>
#include <sstream>

using namespace qwb;

namespace {

constexpr double pi = std::numbers::pi;

double entry_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Eigen::VectorXd doubled(const Eigen::VectorXd& v) {
    std::vector<double> out;
    for (double x : v) out.insert(out.end(), {x, x});
    return spectrum_from_phases(out, "").phases;
}

}  // namespace

TEST_CASE("phase wrapping") {
    CHECK(wrap_phase(0.5) == doctest::Approx(0.5));
    CHECK(wrap_phase(-pi) == pi);
    CHECK(wrap_phase(pi) == pi);
    CHECK(wrap_phase(3 * pi) == doctest::Approx(pi));
    CHECK(wrap_phase(2 * pi + 0.25) == doctest::Approx(0.25));
    CHECK(wrap_phase(-pi - 0.1) == doctest::Approx(pi - 0.1));
    CHECK(wrap_phase(-pi + 1e-13) == pi);
}

TEST_CASE("eigenphases of simple operators") {
    const SpectrumResult id = eigenphases(Eigen::MatrixXcd::Identity(4, 4));
    CHECK(id.phases.cwiseAbs().maxCoeff() < 1e-15);

    const SpectrumResult one = eigenphases(compose_step(make_billiard(BilliardKind::One, 5, 0.0)));
    REQUIRE(one.size() == 10);
    CHECK(phase_multiset_distance(one.phases, reference::roots_of_unity_phases(10)) < 1e-12);
    for (Index i = 1; i < one.size(); ++i) CHECK(one.phases(i) > one.phases(i - 1));

    const SpectrumResult two = eigenphases(compose_step(make_billiard(BilliardKind::Two, 6, 0.0)));
    CHECK(phase_multiset_distance(two.phases, doubled(reference::roots_of_unity_phases(6))) < 1e-10);

    for (Index i = 0; i < one.size(); ++i) {
        CHECK(std::abs(one.eigenvalues(i) - std::polar(1.0, one.phases(i))) < 1e-12);
    }
}

TEST_CASE("eigenphases agree with the characteristic polynomial") {
    for (double theta : {0.37, 1.2}) {
        const Eigen::MatrixXcd u = compose_step(make_billiard(BilliardKind::One, 4, theta, PathTag::Sin, 1.0)).matrix;
        const Eigen::VectorXd roots = reference::charpoly_phases(u);
        const SpectrumResult s = eigenphases(u);
        CHECK(phase_multiset_distance(s.phases, spectrum_from_phases({roots.begin(), roots.end()}, "").phases) <
              1e-9);
    }
}

TEST_CASE("non-unitary inputs are rejected") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    m(0, 0) = 1.001;
    CHECK_THROWS_AS(eigenphases(m), NumericalError);
    CHECK_THROWS_AS(eigenphases(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("phase multiset distance") {
    Eigen::VectorXd a(3), b(3);
    a << -3.1, 0.0, 3.1;
    b << -3.1, 1e-3, 3.1;
    CHECK(phase_multiset_distance(a, b) == doctest::Approx(1e-3));
    Eigen::VectorXd c(3);
    c << -pi, 0.0, 3.1;
    Eigen::VectorXd d(3);
    d << 0.0, 3.1, pi;
    CHECK(phase_multiset_distance(c, d) < 1e-15);
    CHECK(std::isinf(phase_multiset_distance(a, Eigen::VectorXd::Zero(2))));
}

TEST_CASE("N=5 Bloch table is unitary and reduces to the direct operator at k=0") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int i = 0; i < 200; ++i) CHECK(verify_unitarity(bloch_kind1(angle(rng), angle(rng), 5)) < 1e-12);

    for (double theta : {0.0, 0.4, pi / 4, 2.0}) {
        const Eigen::MatrixXcd direct = compose_step(make_billiard(BilliardKind::One, 5, theta)).matrix;
        CHECK(entry_diff(bloch_kind1(theta, 0.0, 5), direct) < 1e-15);
        CHECK(phase_multiset_distance(eigenphases(bloch_kind1(theta, 0.0, 5)).phases, eigenphases(direct).phases) <
              1e-10);
    }
    const Eigen::MatrixXcd perm = bloch_kind1(0.0, 0.0, 5);
    for (Index i = 0; i < perm.size(); ++i) {
        const Complex v = perm.data()[i];
        CHECK((v == Complex(0.0) || v == Complex(1.0) || v == Complex(-1.0)));
    }
}

TEST_CASE("Bloch table entries") {
    const double theta = 0.3;
    const double k = 0.8;
    const Eigen::MatrixXcd b = bloch_kind1(theta, k, 5);
    const Grid1D g(0, 4);
    const Complex plus = std::polar(1.0, k);
    const Complex minus = std::polar(1.0, -k);
    // interior up amplitude arrives from the left neighbour
    CHECK(std::abs(b(g.index(2, Spin::Up), g.index(1, Spin::Up)) - minus * std::cos(theta)) < 1e-15);
    CHECK(std::abs(b(g.index(2, Spin::Up), g.index(1, Spin::Down)) - minus * std::sin(theta)) < 1e-15);
    // interior down amplitude arrives from the right neighbour
    CHECK(std::abs(b(g.index(2, Spin::Down), g.index(3, Spin::Up)) + plus * std::sin(theta)) < 1e-15);
    CHECK(std::abs(b(g.index(2, Spin::Down), g.index(3, Spin::Down)) - plus * std::cos(theta)) < 1e-15);
    // the bounces stay bare
    CHECK(std::abs(b(g.index(4, Spin::Down), g.index(4, Spin::Up)) - std::cos(theta)) < 1e-15);
    CHECK(std::abs(b(g.index(0, Spin::Up), g.index(0, Spin::Down)) - std::cos(theta)) < 1e-15);
}

TEST_CASE("printed signs are a row-sign flip of the coin convention") {
    for (int n : {3, 5, 6}) {
        const double theta = 0.9;
        const double k = -1.3;
        const Eigen::MatrixXcd coin = bloch_kind1(theta, k, n, BlochSigns::Coin);
        const Eigen::MatrixXcd printed = bloch_kind1(theta, k, n, BlochSigns::Printed);
        const Eigen::MatrixXcd w = kind1_shift(Grid1D(0, n - 1)).matrix;
        Eigen::VectorXcd d(2 * n);
        for (Index i = 0; i < d.size(); ++i) d(i) = i % 2 == 0 ? 1.0 : -1.0;
        const Eigen::MatrixXcd s = w * d.asDiagonal() * w.transpose();
        CHECK(s.isDiagonal());
        CHECK(entry_diff(printed, s * coin) < 1e-15);
        CHECK(verify_unitarity(printed) < 1e-12);
        const Complex ratio = printed.determinant() / coin.determinant();
        CHECK(std::abs(ratio - (n % 2 == 0 ? 1.0 : -1.0)) < 1e-12);
    }
}

TEST_CASE("straight-line Bloch spectra do not depend on k") {
    const SpectrumResult at0 = eigenphases(bloch_kind1(0.7, 0.0, 6));
    for (double k : {-2.0, 0.5, 3.0}) {
        CHECK(phase_multiset_distance(eigenphases(bloch_kind1(0.7, k, 6)).phases, at0.phases) < 1e-10);
    }
    const SpectrumResult k2 = eigenphases(bloch_kind2(0.7, 0.0, 8));
    CHECK(phase_multiset_distance(eigenphases(bloch_kind2(0.7, 1.1, 8)).phases, k2.phases) < 1e-10);
    CHECK(entry_diff(bloch_kind2(0.7, 0.0, 8), compose_step(make_billiard(BilliardKind::Two, 8, 0.7)).matrix) <
          1e-15);
    CHECK_THROWS_AS(bloch_kind1(0.7, 0.0, 1), std::invalid_argument);
}

TEST_CASE("curved substitution on a straight line") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 5;
        const double theta = angle(rng);
        BlochParams p;
        p.k_path = angle(rng);
        p.k_alpha = angle(rng);
        p.alpha = angle(rng);
        const CurvedPath path = CurvedPath::straight(Grid1D(0, n - 1));
        const double k = p.k_path + p.k_alpha;

        p.variant = BlochVariant::PlaneWaveConsistent;
        CHECK(entry_diff(bloch_curved(theta, p, path, BilliardKind::One), bloch_kind1(theta, k, n)) < 1e-14);

        // The literal substitution picks up e^{-i} on the forward hop and
        // e^{+i} on the backward one, so it matches the table only with
        // k_path = 0 and k_alpha = k + 1.
        p.variant = BlochVariant::Literal;
        CHECK(entry_diff(bloch_curved(theta, p, path, BilliardKind::One), bloch_kind1(theta, k, n)) > 1e-3);
        BlochParams q = p;
        q.k_path = 0.0;
        q.k_alpha = k + 1.0;
        CHECK(entry_diff(bloch_curved(theta, q, path, BilliardKind::One), bloch_kind1(theta, k, n)) < 1e-14);
    }
}

TEST_CASE("substitution factors") {
    const CurvedPath path(PathFunction(PathTag::Sin), 0.0, 3.0, 0.5);
    BlochParams p;
    p.k_path = 0.4;
    p.k_alpha = -0.2;
    p.alpha = 0.7;
    const HopPhases lit = substitution_phases(p, path, BilliardKind::One);
    CHECK(std::abs(lit.from_right - std::polar(1.0, 0.4 + std::sin(0.2) - std::sin(0.7) - 0.2)) < 1e-15);
    CHECK(std::abs(lit.from_left - std::polar(1.0, 0.4 + std::sin(1.2) - std::sin(0.7) + 0.2)) < 1e-15);

    p.variant = BlochVariant::PlaneWaveConsistent;
    const HopPhases pw = substitution_phases(p, path, BilliardKind::Two);
    CHECK(std::abs(pw.from_right - std::polar(1.0, 0.4 * (std::sin(1.7) - std::sin(0.7)) - 0.2)) < 1e-15);
    CHECK(std::abs(pw.from_left - std::polar(1.0, 0.4 * (std::sin(-0.3) - std::sin(0.7)) + 0.2)) < 1e-15);
}

TEST_CASE("curved Bloch matrices are unitary and periodic in alpha for sin") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (BlochVariant variant : {BlochVariant::Literal, BlochVariant::PlaneWaveConsistent}) {
        for (PathTag tag : {PathTag::Sin, PathTag::Cos, PathTag::Cosh, PathTag::Tanh}) {
            for (BilliardKind kind : {BilliardKind::One, BilliardKind::Two}) {
                const CurvedPath path(PathFunction(tag), -1.0, 2.5, 0.5);
                BlochParams p{0.0, angle(rng), angle(rng), angle(rng), variant, BlochSigns::Coin};
                CHECK(verify_unitarity(bloch_curved(angle(rng), p, path, kind)) < 1e-12);
            }
        }
        const CurvedPath sine(PathFunction(PathTag::Sin), 0.0, 4.0, 1.0);
        BlochParams a{0.0, 0.9, -0.4, 0.3, variant, BlochSigns::Coin};
        BlochParams b = a;
        b.alpha += 2 * pi;
        CHECK(entry_diff(bloch_curved(0.6, a, sine, BilliardKind::One), bloch_curved(0.6, b, sine, BilliardKind::One)) <
              1e-13);
    }
}

TEST_CASE("dispersion scans") {
    const DispersionTable flat =
        dispersion_scan([](double) { return Eigen::MatrixXcd::Identity(4, 4).eval(); }, -1.0, 1.0, 7);
    REQUIRE(flat.k.size() == 7);
    CHECK(flat.k.front() == -1.0);
    CHECK(flat.k.back() == 1.0);
    for (const auto& ph : flat.phases) CHECK(ph.cwiseAbs().maxCoeff() < 1e-15);

    const DispersionTable t =
        dispersion_scan([](double k) { return bloch_kind1(pi / 2, k, 5); }, -pi, pi, 100, 3);
    REQUIRE(t.k.size() == 100);
    for (const auto& ph : t.phases) {
        CHECK(ph.size() == 10);
        for (Index i = 1; i < ph.size(); ++i) CHECK(ph(i) >= ph(i - 1));
    }
    for (double k : {0.3, 1.7}) {
        const Eigen::VectorXd a = eigenphases(bloch_kind1(pi / 2, k, 5)).phases;
        const Eigen::VectorXd b = eigenphases(bloch_kind1(pi / 2, -k, 5)).phases;
        std::vector<double> neg;
        for (double x : b) neg.push_back(-x);
        CHECK(phase_multiset_distance(a, spectrum_from_phases(neg, "").phases) < 1e-10);
    }
    const DispersionTable serial =
        dispersion_scan([](double k) { return bloch_kind1(pi / 2, k, 5); }, -pi, pi, 100, 1);
    for (std::size_t i = 0; i < t.phases.size(); ++i) CHECK(t.phases[i] == serial.phases[i]);
    CHECK_THROWS_AS(dispersion_scan([](double) { return Eigen::MatrixXcd::Identity(2, 2).eval(); }, 0, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("spectrum CSV") {
    std::ostringstream os;
    write_csv(os, eigenphases(Eigen::MatrixXcd::Identity(2, 2)));
    CHECK(os.str() == "index,re,im,phase\n0,1,0,0\n1,1,0,0\n");
    std::ostringstream d;
    DispersionTable t{{0.5}, {Eigen::VectorXd::Constant(1, 0.25)}};
    write_csv(d, t);
    CHECK(d.str() == "k,band_index,phase\n0.5,0,0.25\n");
}
