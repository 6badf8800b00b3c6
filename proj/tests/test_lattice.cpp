#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwb/lattice.hpp"

#include <cmath>
#include <numbers>

using namespace qwb;

TEST_CASE("grid indexing is site-major, spin-minor") {
    const Grid1D g(-2, 2);
    CHECK(g.size() == 5);
    CHECK(g.dim() == 10);
    CHECK(g.central_site() == 0);
    CHECK(g.index(-2, Spin::Up) == 0);
    CHECK(g.index(-2, Spin::Down) == 1);
    CHECK(g.index(2, Spin::Down) == 9);
    for (Index i = 0; i < g.dim(); ++i) {
        const auto [site, s] = g.site_spin(i);
        CHECK(g.index(site, s) == i);
    }
    CHECK(Grid1D(0, 3).central_site() == 1);
    CHECK_THROWS_AS(Grid1D(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(4, 1), std::invalid_argument);
}

TEST_CASE("kind-2 grid needs interleaved sublattices") {
    const Kind2Grid k = Kind2Grid::over(Grid1D(0, 5));
    CHECK(k.even_left() == 0);
    CHECK(k.even_right() == 4);
    CHECK(k.odd_left() == 1);
    CHECK(k.odd_right() == 5);
    CHECK(k.on_even(2));
    CHECK_FALSE(k.on_even(3));
    CHECK(k.grid() == Grid1D(0, 5));
    CHECK_THROWS_AS(Kind2Grid::over(Grid1D(0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(Kind2Grid::over(Grid1D(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(Kind2Grid(0, 4, 2, 5), std::invalid_argument);
}

TEST_CASE("path functions") {
    CHECK(parse_path_tag("cosh") == PathTag::Cosh);
    CHECK(path_name(PathTag::Tanh) == "tanh");
    CHECK_THROWS_AS(parse_path_tag("spiral"), std::invalid_argument);
    CHECK(PathFunction(PathTag::Sin)(0.5) == doctest::Approx(std::sin(0.5)));
    CHECK(PathFunction(PathTag::Line)(-1.25) == -1.25);
    const PathFunction sq = PathFunction::custom("square", [](double a) { return a * a; });
    CHECK(sq.tag() == PathTag::Custom);
    CHECK(sq(3.0) == 9.0);
}

TEST_CASE("curved path sampling") {
    const CurvedPath p(PathFunction(PathTag::Cos), -1.0, 1.0, 0.5);
    CHECK(p.point_count() == 5);
    CHECK(p.alpha(4) == doctest::Approx(1.0));
    const auto pts = p.coordinates();
    REQUIRE(pts.size() == 5);
    CHECK(pts[1].alpha == doctest::Approx(-0.5));
    CHECK(pts[1].f_alpha == doctest::Approx(std::cos(-0.5)));
    CHECK(p.grid().size() == 5);
    CHECK_THROWS_AS(CurvedPath(PathFunction(PathTag::Line), 0.0, 1.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(CurvedPath(PathFunction(PathTag::Line), 0.0, 1.0, -0.5), std::invalid_argument);

    const CurvedPath s = CurvedPath::straight(Grid1D(-3, 2));
    CHECK(s.grid() == Grid1D(-3, 2));
    CHECK(s.path().tag() == PathTag::Line);
}

TEST_CASE("delta states") {
    const Grid1D g(-2, 2);
    const SpinorState a = make_delta_state(g, 0, 1.0, 0.0);
    CHECK(a.amplitude(0, Spin::Up) == Complex(1.0, 0.0));
    CHECK(a.amplitudes().cwiseAbs().sum() == doctest::Approx(1.0));

    const SpinorState b = make_delta_state(g, 0, 1.0, Complex(0.0, 1.0));
    CHECK(std::abs(b.amplitude(0, Spin::Up) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(b.amplitude(0, Spin::Down) - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);

    CHECK_THROWS_AS(make_delta_state(g, 7, 1.0, 0.0), std::out_of_range);
    CHECK_THROWS_AS(make_delta_state(g, 0, 0.0, 0.0), std::invalid_argument);

    const SpinorState d = default_initial_state(Grid1D(-35, 35));
    CHECK(std::abs(d.amplitude(0, Spin::Down) - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("norm and probability profile") {
    const Grid1D g(0, 1);
    CHECK(state_norm(SpinorState(g, Eigen::VectorXcd::Zero(4))) == 0.0);
    CHECK(state_norm(make_delta_state(g, 1, 0.0, 1.0)) == doctest::Approx(1.0));

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = 0.6;
    v(1) = Complex(0.0, 0.8);
    CHECK(state_norm(SpinorState(g, v)) == doctest::Approx(1.0).epsilon(1e-15));

    const auto delta = probability_profile(make_delta_state(Grid1D(-1, 1), 0, 1.0, 0.0));
    REQUIRE(delta.size() == 3);
    CHECK(delta[1].site == 0);
    CHECK(delta[1].probability == doctest::Approx(1.0));
    CHECK(delta[0].probability == 0.0);

    Eigen::VectorXcd half = Eigen::VectorXcd::Zero(4);
    half(0) = 1.0 / std::sqrt(2.0);
    half(3) = Complex(0.0, 1.0 / std::sqrt(2.0));
    const auto p = probability_profile(SpinorState(g, half));
    CHECK(p[0].probability == doctest::Approx(0.5));
    CHECK(p[1].probability == doctest::Approx(0.5));

    CHECK_THROWS_AS(SpinorState(g, Eigen::VectorXcd::Zero(3)), std::invalid_argument);
}
