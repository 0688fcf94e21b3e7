// The three certified sup-functionals: the Schatten p-generalized numerical
// radius omega_p, the rotating-sum functional, and the circle functional.
//
// All three objectives have the form theta -> ||cos(theta)*X1 + sin(theta)*X2||_p
// and flip sign under theta -> theta + pi, so they are maximized over [0, pi)
// with the harmonic-envelope bound enabled. The Lipschitz constants follow
// from the triangle inequality and |e^{i a} - e^{i b}| <= |a - b|:
//   omega_p:            L = ||A||_p
//   rotating sum:       L = ||A||_p + ||B||_p
//   circle functional:  L = ||Re T||_p + ||Im T||_p
#pragma once

#include <cmath>

#include "omegap/certify.hpp"
#include "omegap/matrix.hpp"
#include "omegap/schatten.hpp"

namespace omegap {

namespace detail {

inline CertifiedValue sup_circle_norm(const ComplexMatrix& x1, const ComplexMatrix& x2,
                                      const PNorm& p, double lipschitz,
                                      const OptimizerConfig& cfg) {
    auto f = [&](double theta) {
        return schatten(Complex(std::cos(theta), 0.0) * x1 + Complex(std::sin(theta), 0.0) * x2, p);
    };
    return certified_sup(f, M_PI, lipschitz, cfg, BoundModel::harmonic_envelope);
}

}  // namespace detail

/// omega_p(A): certified sup over theta of ||Re(e^{i theta} A)||_p.
inline CertifiedValue omega(const ComplexMatrix& a, const PNorm& p, const OptimizerConfig& cfg = {}) {
    require_square(a, "omega");
    // Re(e^{i theta} A) = cos(theta) Re(A) - sin(theta) Im(A)
    return detail::sup_circle_norm(re_part(a), -im_part(a), p, schatten(a, p), cfg);
}

/// Certified sup over theta of ||e^{i theta} A + e^{-i theta} B*||_p.
inline CertifiedValue rotating_sum_sup(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const PNorm& p, const OptimizerConfig& cfg = {}) {
    require_square(a, "rotating_sum_sup");
    require_square(b, "rotating_sum_sup");
    if (a.rows() != b.rows())
        throw std::invalid_argument("rotating_sum_sup: dimension mismatch");
    const ComplexMatrix bstar = adjoint(b);
    // e^{i t} A + e^{-i t} B* = cos(t) (A + B*) + sin(t) i(A - B*)
    const ComplexMatrix x1 = a + bstar;
    const ComplexMatrix x2 = Complex(0.0, 1.0) * (a - bstar);
    return detail::sup_circle_norm(x1, x2, p, schatten(a, p) + schatten(b, p), cfg);
}

/// Certified sup over the unit circle alpha^2 + beta^2 = 1 of
/// ||alpha Re(T) + beta Im(T)||_p, parameterized alpha = cos(phi), beta = sin(phi).
inline CertifiedValue circle_sup(const ComplexMatrix& t, const PNorm& p,
                                 const OptimizerConfig& cfg = {}) {
    require_square(t, "circle_sup");
    const ComplexMatrix re = re_part(t);
    const ComplexMatrix im = im_part(t);
    return detail::sup_circle_norm(re, im, p, schatten(re, p) + schatten(im, p), cfg);
}

}  // namespace omegap
