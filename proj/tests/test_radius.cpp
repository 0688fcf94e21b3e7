#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "omegap/radius.hpp"
#include "omegap/random.hpp"
#include "oracle.hpp"

using namespace omegap;
using Catch::Approx;

namespace {
const OptimizerConfig kCfg{1e-6, 200000};
const Complex I(0.0, 1.0);

double omega_v(const ComplexMatrix& a, const PNorm& p) { return omega(a, p, kCfg).value; }
}  // namespace

TEST_CASE("omega of a Hermitian matrix is its Schatten norm") {
    ComplexMatrix h = ComplexMatrix::diagonal({1.0, -2.0});
    CertifiedValue v = omega(h, PNorm::finite(1), kCfg);
    CHECK(v.value == Approx(3.0).margin(2e-6));
    CHECK(3.0 <= v.value + v.eps + 1e-12);

    for (double p : {1.0, 2.0, 4.0}) {
        ComplexMatrix hh = random_matrix(MatrixKind::hermitian, 3, 42);
        const PNorm pn = PNorm::finite(p);
        CHECK(omega_v(hh, pn) == Approx(schatten(hh, pn)).margin(2e-6));
    }
}

TEST_CASE("omega of the 2x2 Jordan block has the closed form 2^(1/p - 1)") {
    ComplexMatrix j{{0.0, 1.0}, {0.0, 0.0}};

    // Derivation check: Re(e^{i theta} J) has both singular values 1/2 at any theta.
    for (double theta : {0.0, 0.3, 1.1, 2.9}) {
        auto s = singular_values(re_part(rotate(j, theta)));
        CHECK(s.values[0] == Approx(0.5).margin(1e-12));
        CHECK(s.values[1] == Approx(0.5).margin(1e-12));
    }

    for (double p : {1.0, 2.0, 4.0}) {
        const double expected = std::pow(2.0, 1.0 / p - 1.0);
        CertifiedValue v = omega(j, PNorm::finite(p), kCfg);
        CHECK(v.value == Approx(expected).margin(2e-6));
        auto grid = oracle::omega_grid(j, PNorm::finite(p), 2000);
        CHECK(grid.value <= v.value + v.eps);
    }
    CHECK(omega_v(j, PNorm::infinity()) == Approx(0.5).margin(2e-6));
}

TEST_CASE("omega of the identity is n^(1/p)") {
    ComplexMatrix id = ComplexMatrix::identity(3);
    for (double p : {1.0, 2.0}) {
        CHECK(omega_v(id, PNorm::finite(p)) == Approx(std::pow(3.0, 1.0 / p)).margin(2e-6));
    }
    CHECK(omega_v(id, PNorm::infinity()) == Approx(1.0).margin(2e-6));
}

TEST_CASE("omega certificate contains the dense grid maximum") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ComplexMatrix g = random_matrix(MatrixKind::ginibre, 3, 1000 + seed);
        for (const PNorm& p : {PNorm::finite(1), PNorm::finite(2), PNorm::infinity()}) {
            CertifiedValue v = omega(g, p, kCfg);
            auto grid = oracle::omega_grid(g, p, 20000);
            CHECK(grid.value <= v.value + v.eps);
            CHECK(v.value <= grid.value + schatten(g, p) * (M_PI / 20000.0));
        }
    }
}

TEST_CASE("omega behaves like a norm at tested points") {
    const PNorm p = PNorm::finite(3);
    ComplexMatrix a = random_matrix(MatrixKind::ginibre, 3, 7);
    ComplexMatrix b = random_matrix(MatrixKind::ginibre, 3, 8);
    const Complex c(0.6, -1.7);

    CertifiedValue va = omega(a, p, kCfg);
    CertifiedValue vca = omega(c * a, p, kCfg);
    CHECK(std::abs(vca.value - std::abs(c) * va.value) <= 2e-6 * std::max(1.0, std::abs(c)));

    CertifiedValue vb = omega(b, p, kCfg);
    CertifiedValue vab = omega(a + b, p, kCfg);
    CHECK(vab.value <= va.value + vb.value + 3e-6);
}

TEST_CASE("omega is self adjoint and weakly unitarily invariant") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ComplexMatrix a = random_matrix(MatrixKind::ginibre, 4, 2000 + seed);
        ComplexMatrix u = random_matrix(MatrixKind::unitary, 4, 3000 + seed);
        for (const PNorm& p : {PNorm::finite(1.5), PNorm::finite(2), PNorm::infinity()}) {
            const double wa = omega_v(a, p);
            CHECK(std::abs(omega_v(adjoint(a), p) - wa) <= 2e-6);
            const double scale = schatten(a, p);
            CHECK(std::abs(omega_v(u * a * adjoint(u), p) - wa) <= 2e-6 + 1e-8 * scale);
        }
    }
}

TEST_CASE("omega sandwich bounds") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ComplexMatrix a = random_matrix(MatrixKind::ginibre, 4, 4000 + seed);
        for (const PNorm& p : {PNorm::finite(1), PNorm::finite(2.5), PNorm::infinity()}) {
            CertifiedValue v = omega(a, p, kCfg);
            const ComplexMatrix sym = a + adjoint(a);
            CHECK(0.5 * schatten(sym, p) <= v.value + v.eps);
            CHECK(v.value <= schatten(a, p) + 1e-10);
        }
    }
}

TEST_CASE("sup of the imaginary-part profile equals omega") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        ComplexMatrix a = random_matrix(MatrixKind::ginibre, 3, 5000 + seed);
        const PNorm p = PNorm::finite(2);
        auto f = [&](double theta) { return schatten(im_part(rotate(a, theta)), p); };
        CertifiedValue vim = certified_sup(f, M_PI, schatten(a, p), kCfg,
                                           BoundModel::harmonic_envelope);
        CertifiedValue vom = omega(a, p, kCfg);
        CHECK(std::abs(vim.value - vom.value) <= vim.eps + vom.eps + 1e-9);
    }
}

TEST_CASE("rotating-sum functional closed forms") {
    ComplexMatrix one{{1.0}};
    for (const PNorm& p : {PNorm::finite(1), PNorm::finite(3), PNorm::infinity()}) {
        CertifiedValue v = rotating_sum_sup(one, one, p, kCfg);
        CHECK(v.value == Approx(2.0).margin(2e-6));
    }

    // B = 0: the profile is constant ||A||_p by phase invariance.
    ComplexMatrix a = random_matrix(MatrixKind::ginibre, 3, 61);
    ComplexMatrix z = ComplexMatrix::zeros(3);
    for (const PNorm& p : {PNorm::finite(2), PNorm::infinity()}) {
        CertifiedValue v = rotating_sum_sup(a, z, p, kCfg);
        CHECK(v.value == Approx(schatten(a, p)).margin(2e-6));
    }

    CHECK_THROWS_AS(rotating_sum_sup(a, ComplexMatrix::identity(2), PNorm::finite(2), kCfg),
                    std::invalid_argument);
}

TEST_CASE("rotating-sum functional ties to omega of the off-diagonal block") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        ComplexMatrix a = random_matrix(MatrixKind::ginibre, 2, 6000 + seed);
        ComplexMatrix b = random_matrix(MatrixKind::ginibre, 2, 7000 + seed);
        const PNorm p = PNorm::finite(2);
        CertifiedValue rot = rotating_sum_sup(a, b, p, kCfg);
        CertifiedValue om = omega(off_diag(a, b), p, kCfg);
        const double factor = std::pow(2.0, 1.0 / 2.0 - 1.0);
        CHECK(std::abs(factor * rot.value - om.value) <= rot.eps + om.eps + 1e-8);
    }
}

TEST_CASE("circle functional closed forms and agreement with omega") {
    ComplexMatrix h = random_matrix(MatrixKind::hermitian, 3, 71);
    for (const PNorm& p : {PNorm::finite(1.25), PNorm::infinity()}) {
        CertifiedValue v = circle_sup(h, p, kCfg);
        CHECK(v.value == Approx(schatten(h, p)).margin(2e-6));
    }

    ComplexMatrix ti{{I}};
    CHECK(circle_sup(ti, PNorm::finite(2), kCfg).value == Approx(1.0).margin(2e-6));

    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        ComplexMatrix t = random_matrix(MatrixKind::ginibre, 3, 8000 + seed);
        const PNorm p = PNorm::finite(3);
        CertifiedValue vc = circle_sup(t, p, kCfg);
        CertifiedValue vo = omega(t, p, kCfg);
        CHECK(std::abs(vc.value - vo.value) <= vc.eps + vo.eps + 1e-9);
    }
}

TEST_CASE("rotating-sum and circle certificates contain their dense grid maxima") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        ComplexMatrix a = random_matrix(MatrixKind::ginibre, 3, 9000 + seed);
        ComplexMatrix b = random_matrix(MatrixKind::hermitian, 3, 9100 + seed);
        for (const PNorm& p : {PNorm::finite(1), PNorm::finite(2), PNorm::infinity()}) {
            CertifiedValue rot = rotating_sum_sup(a, b, p, kCfg);
            auto grot = oracle::dense_grid_max(
                [&](double t) { return schatten(rotate(a, t) + rotate(adjoint(b), -t), p); },
                M_PI, 10000);
            CHECK(grot.value <= rot.value + rot.eps);

            CertifiedValue circ = circle_sup(a, p, kCfg);
            auto gcirc = oracle::dense_grid_max(
                [&](double phi) {
                    return schatten(Complex(std::cos(phi), 0.0) * re_part(a) +
                                        Complex(std::sin(phi), 0.0) * im_part(a),
                                    p);
                },
                M_PI, 10000);
            CHECK(gcirc.value <= circ.value + circ.eps);
        }
    }
}

TEST_CASE("zero matrix has zero radius with a zero certificate") {
    CertifiedValue v = omega(ComplexMatrix::zeros(3), PNorm::finite(2), kCfg);
    CHECK(v.value == 0.0);
    CHECK(v.eps == 0.0);
}
