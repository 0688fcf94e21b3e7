#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "omegap/certify.hpp"
#include "omegap/random.hpp"
#include "omegap/schatten.hpp"
#include "oracle.hpp"

using namespace omegap;
using Catch::Approx;

TEST_CASE("certified_sup finds the maximum of |cos|") {
    auto f = [](double t) { return std::abs(std::cos(t)); };
    CertifiedValue v = certified_sup(f, M_PI, 1.0, {1e-6, 200000});
    CHECK(v.value <= 1.0);
    CHECK(v.value >= 1.0 - 1e-6);
    CHECK(v.eps <= 1e-6);
    CHECK(1.0 <= v.value + v.eps);
}

TEST_CASE("constant objective with zero Lipschitz bound is exact") {
    auto f = [](double) { return 2.5; };
    CertifiedValue v = certified_sup(f, M_PI, 0.0);
    CHECK(v.value == 2.5);
    CHECK(v.eps == 0.0);
    CHECK(v.arg == 0.0);
}

TEST_CASE("certificate contains the dense grid maximum for a seeded objective") {
    ComplexMatrix g = random_matrix(MatrixKind::ginibre, 4, 2024);
    const PNorm p2 = PNorm::finite(2);
    auto f = [&](double theta) { return schatten(re_part(rotate(g, theta)), p2); };
    const double lip = schatten(g, p2);

    CertifiedValue v = certified_sup(f, M_PI, lip, {1e-6, 200000}, BoundModel::harmonic_envelope);
    const std::size_t n = 100000;
    auto grid = oracle::dense_grid_max(f, M_PI, n);
    const double grid_cell_bound = lip * (M_PI / static_cast<double>(n)) / 2.0;

    CHECK(grid.value <= v.value + v.eps);
    CHECK(v.value <= grid.value + grid_cell_bound);
}

TEST_CASE("harmonic envelope certifies a flat norm profile quickly") {
    // ||Re(e^{i t} J)||_p is constant in t for the nilpotent Jordan block.
    ComplexMatrix j{{0.0, 1.0}, {0.0, 0.0}};
    const PNorm p2 = PNorm::finite(2);
    auto f = [&](double theta) { return schatten(re_part(rotate(j, theta)), p2); };
    CertifiedValue v = certified_sup(f, M_PI, 1.0, {1e-6, 20000}, BoundModel::harmonic_envelope);
    CHECK(v.value == Approx(std::sqrt(0.5)).margin(1e-9));
    CHECK(v.eps <= 1e-6);
}

TEST_CASE("budget exhaustion raises an uncertified error with the best value") {
    auto f = [](double t) { return std::abs(std::cos(3.0 * t)); };
    try {
        certified_sup(f, M_PI, 3.0, {1e-12, 40});
        FAIL("expected UncertifiedError");
    } catch (const UncertifiedError& e) {
        CHECK(e.best_value <= 1.0);
        CHECK(e.best_value >= 0.9);
        CHECK(e.achieved_eps > 1e-12);
    }
}

TEST_CASE("tightening eps keeps the value inside the coarser interval") {
    ComplexMatrix g = random_matrix(MatrixKind::ginibre, 3, 555);
    const PNorm p1 = PNorm::finite(1);
    auto f = [&](double theta) { return schatten(re_part(rotate(g, theta)), p1); };
    const double lip = schatten(g, p1);

    CertifiedValue coarse = certified_sup(f, M_PI, lip, {1e-4, 200000}, BoundModel::harmonic_envelope);
    CertifiedValue fine = certified_sup(f, M_PI, lip, {1e-5, 200000}, BoundModel::harmonic_envelope);
    CHECK(fine.value >= coarse.value);
    CHECK(fine.value <= coarse.value + coarse.eps);
}

TEST_CASE("smallest maximizer wins ties") {
    // Constant function with nonzero declared Lipschitz bound: every point
    // attains the maximum, so the reported arg must be the first grid point.
    auto f = [](double) { return 1.0; };
    CertifiedValue v = certified_sup(f, M_PI, 0.5, {1e-3, 200000});
    CHECK(v.arg == 0.0);
}

TEST_CASE("invalid configurations are rejected") {
    auto f = [](double) { return 0.0; };
    CHECK_THROWS_AS(certified_sup(f, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(certified_sup(f, M_PI, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(certified_sup(f, M_PI, 1.0, {0.0, 100}), std::invalid_argument);
    CHECK_THROWS_AS(certified_sup(f, M_PI, 1.0, {1e-6, 2}), std::invalid_argument);
}
