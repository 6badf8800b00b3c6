#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwb/reference.hpp"
#include "qwb/statistics.hpp"

#include <numbers>
#include <random>
#include <sstream>

using namespace qwb;

namespace {

constexpr double pi = std::numbers::pi;

Eigen::VectorXd vec(std::initializer_list<double> xs) {
    Eigen::VectorXd v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

double area(const SpacingHistogram& h) {
    double a = 0.0;
    for (Index b = 0; b < h.bins(); ++b) a += h.densities(b) * (h.bin_edges(b + 1) - h.bin_edges(b));
    return a;
}

}  // namespace

TEST_CASE("equispaced circular phases give unit spacings") {
    SpacingOptions o;
    o.gaps_to_exclude = 0;
    const SpacingSequence s = spacings_from_phases(vec({0.0, pi / 2, pi, 3 * pi / 2}), o);
    REQUIRE(s.spacings.size() == 4);
    for (double x : s.spacings) CHECK(x == doctest::Approx(1.0));
    CHECK(s.raw_mean == doctest::Approx(pi / 2));
}

TEST_CASE("the first of two equal largest gaps is excluded") {
    SpacingOptions o;
    o.circular = false;
    o.gaps_to_exclude = 1;
    const SpacingSequence s = spacings_from_phases(vec({0.0, 1.0, 2.0, 2.1}), o);
    REQUIRE(s.spacings.size() == 2);
    CHECK(s.spacings(0) == doctest::Approx(1.0 / 0.55));
    CHECK(s.spacings(1) == doctest::Approx(0.1 / 0.55));
    REQUIRE(s.excluded_gaps.size() == 1);
    CHECK(s.excluded_gaps[0] == 1.0);
}

TEST_CASE("degeneracies survive unless merged") {
    SpacingOptions o;
    o.gaps_to_exclude = 0;
    const SpacingSequence s = spacings_from_phases(vec({0.0, 0.0, pi}), o);
    CHECK(s.spacings.minCoeff() == 0.0);
    SpacingOptions merge = o;
    merge.degeneracy_tolerance = 1e-9;
    const SpacingSequence merged = spacings_from_phases(vec({0.0, 0.0, 1.0, 2.0}), merge);
    CHECK(merged.spacings.minCoeff() > 0.0);
}

TEST_CASE("spacing preconditions") {
    SpacingOptions o;
    CHECK_THROWS_AS(spacings_from_phases(vec({0.0, 1.0}), o), std::invalid_argument);
    o.gaps_to_exclude = -1;
    CHECK_THROWS_AS(spacings_from_phases(vec({0.0, 1.0, 2.0}), o), std::invalid_argument);
    o.gaps_to_exclude = 2;
    CHECK_THROWS_AS(spacings_from_phases(vec({0.0, 1.0, 2.0}), o), std::invalid_argument);
    o.gaps_to_exclude = 0;
    CHECK_THROWS_AS(spacings_from_phases(vec({1.0, 0.0, 2.0}), o), std::invalid_argument);
    o.circular = false;
    CHECK_THROWS_AS(spacings_from_phases(vec({1.0, 1.0, 1.0}), o), std::domain_error);
}

TEST_CASE("gap exclusion agrees with the sort oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5 + trial;
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v) x = angle(rng);
        std::sort(v.begin(), v.end());
        SpacingOptions o;
        o.gaps_to_exclude = trial % 4;
        const SpacingSequence s = spacings_from_phases(Eigen::Map<Eigen::VectorXd>(v.data(), n), o);
        std::vector<double> raw;
        for (int i = 1; i < n; ++i) raw.push_back(v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i - 1)]);
        raw.push_back(2 * pi - (v.back() - v.front()));
        const std::vector<double> kept = reference::drop_largest_by_sort(raw, o.gaps_to_exclude);
        REQUIRE(static_cast<std::size_t>(s.spacings.size()) == kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            CHECK(s.spacings(static_cast<Index>(i)) * s.raw_mean == doctest::Approx(kept[i]).epsilon(1e-13));
        }
        CHECK(std::abs(s.spacings.mean() - 1.0) < 1e-12);
    }
}

TEST_CASE("reference densities") {
    CHECK(wigner_pdf(0.0) == 0.0);
    CHECK(wigner_pdf(1.0) == doctest::Approx(0.716186).epsilon(1e-6));
    CHECK(wigner_pdf(1.0) == doctest::Approx(pi / 2 * std::exp(-pi / 4)).epsilon(1e-15));
    CHECK(poisson_pdf(0.0) == 1.0);
    CHECK(poisson_pdf(1.0) == doctest::Approx(0.36788).epsilon(1e-5));
    CHECK_THROWS_AS(wigner_pdf(-0.1), std::domain_error);
    CHECK_THROWS_AS(poisson_pdf(-0.1), std::domain_error);
    CHECK(wigner_pdf(1.0f) == doctest::Approx(0.716186).epsilon(1e-6));

    const auto w = [](double s) { return wigner_pdf(s); };
    const auto p = [](double s) { return poisson_pdf(s); };
    CHECK(reference::simpson(w, 0.0, 12.0, 4000) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(reference::simpson(p, 0.0, 60.0, 20000) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(reference::simpson([&](double s) { return s * w(s); }, 0.0, 12.0, 4000) ==
          doctest::Approx(1.0).epsilon(1e-10));
    for (double s : {0.3, 1.0, 2.5}) {
        CHECK(wigner_cdf(s) == doctest::Approx(reference::simpson(w, 0.0, s, 2000)).epsilon(1e-10));
        CHECK(poisson_cdf(s) == doctest::Approx(reference::simpson(p, 0.0, s, 2000)).epsilon(1e-10));
    }
}

TEST_CASE("histograms integrate to one") {
    const SpacingHistogram one = histogram(normalized_spacings(vec({1, 1, 1, 1})), 1);
    REQUIRE(one.bins() == 1);
    CHECK(area(one) == doctest::Approx(1.0));

    const SpacingSequence pair = normalized_spacings(vec({0.5, 1.5}));
    const SpacingHistogram two = histogram(pair, 2);
    CHECK(two.bin_edges(2) == doctest::Approx(1.5));
    CHECK(two.densities(0) == doctest::Approx(1.0 / 1.5));
    CHECK(two.densities(1) == doctest::Approx(1.0 / 1.5));
    CHECK(area(two) == doctest::Approx(1.0));

    std::mt19937_64 rng(3);
    std::exponential_distribution<double> ex(2.0);
    Eigen::VectorXd raw(777);
    for (double& x : raw) x = ex(rng);
    const SpacingSequence s = normalized_spacings(raw);
    for (int bins : {1, 3, 20, 64}) CHECK(std::abs(area(histogram(s, bins)) - 1.0) < 1e-10);
    CHECK_THROWS_AS(histogram(s, 0), std::invalid_argument);
}

TEST_CASE("KS distance") {
    CHECK(ks_distance(vec({0.5}), [](double s) { return s; }) == doctest::Approx(0.5));
    CHECK(ks_distance(vec({0.25, 0.75}), [](double s) { return s; }) == doctest::Approx(0.25));
}

TEST_CASE("classification of synthetic draws") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::VectorXd p(10000), w(10000);
    for (double& x : p) x = -std::log1p(-u(rng));
    for (double& x : w) x = std::sqrt(-4.0 / pi * std::log1p(-u(rng)));
    const Classification cp = classify(normalized_spacings(p));
    const Classification cw = classify(normalized_spacings(w));
    CHECK(cp.verdict == Verdict::PoissonLike);
    CHECK(cw.verdict == Verdict::WignerLike);
    CHECK(cp.ks_wigner - cp.ks_poisson > 0.05);
    CHECK(cw.ks_poisson - cw.ks_wigner > 0.05);
    CHECK(cp.n_spacings == 10000);

    const Classification rigid = classify(normalized_spacings(Eigen::VectorXd::Ones(20)));
    CHECK(rigid.ks_wigner > 0.3);
    CHECK(rigid.ks_poisson > 0.3);
    CHECK(verdict_name(rigid.verdict).size() > 0);

    CHECK_THROWS_AS(classify(normalized_spacings(Eigen::VectorXd::Ones(9))), std::invalid_argument);
    CHECK(classify(normalized_spacings(p), 1.0).verdict == Verdict::Inconclusive);
}

TEST_CASE("statistics CSV") {
    const SpacingSequence s = normalized_spacings(vec({1.0, 3.0}));
    std::ostringstream a;
    write_csv(a, s);
    CHECK(a.str() == "index,spacing\n0,0.5\n1,1.5\n");
    std::ostringstream b;
    write_csv(b, histogram(s, 1));
    CHECK(b.str() == "bin_left,bin_right,density\n0,1.5,0.66666666666666663\n");
}
