// Certified one-dimensional global maximization on a period.
//
// The engine is a bound-driven subdivision scheme (Piyavskii-Shubert style):
// a priority queue of intervals ordered by a sound upper bound, splitting the
// interval with the largest bound until max-bound <= best + eps. Two interval
// bound models are available:
//
//   * lipschitz: the classical sawtooth bound (f(a)+f(b))/2 + L*(b-a)/2,
//     valid for any L-Lipschitz objective.
//
//   * harmonic_envelope: for objectives of the form
//         f(theta) = || cos(theta)*X1 + sin(theta)*X2 ||
//     with any matrix norm. By norm duality such an f is a supremum of pure
//     first-harmonic sinusoids a*cos(theta) + b*sin(theta). Any sinusoid of
//     that family lying below (f(a), f(b)) at the interval endpoints peaks,
//     inside an interval shorter than pi/2, no higher than the amplitude
//         R = sqrt((f(a)-f(b))^2 + 4 f(a) f(b) sin^2(h/2)) / sin(h)
//     of the interpolating sinusoid, and only when that peak falls inside
//     the interval. This quadratic-order bound is what makes flat objectives
//     (e.g. a constant norm profile) certifiable at eps = 1e-6 in roughly
//     sqrt(scale/eps) evaluations instead of scale/eps.
//
// Both bounds are combined by min; the certificate, not the method, is the
// contract: the returned value is an attained lower bound and
// sup f <= value + eps.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "omegap/detail/format.hpp"

namespace omegap {

/// An attained lower bound `value` (at angle `arg`) with a guaranteed
/// one-sided error: value <= sup f <= value + eps.
struct CertifiedValue {
    double value;
    double arg;
    double eps;
};

struct OptimizerConfig {
    double eps = 1e-6;
    std::size_t max_evals = 200000;
};

/// Thrown when the evaluation budget runs out before the certificate is
/// reached; carries the best value seen and the bound achieved so far.
class UncertifiedError : public std::runtime_error {
public:
    UncertifiedError(double best_value, double best_arg, double achieved_eps)
        : std::runtime_error("certified_sup: evaluation budget exhausted (best " +
                             detail::format_double(best_value) + ", achieved bound " +
                             detail::format_double(achieved_eps) + ")"),
          best_value(best_value), best_arg(best_arg), achieved_eps(achieved_eps) {}

    double best_value;
    double best_arg;
    double achieved_eps;
};

enum class BoundModel { lipschitz, harmonic_envelope };

namespace detail {

// Upper bound over [0, h] for any function that is a supremum of sinusoids
// C*cos(theta - phi), given endpoint values f1, f2 >= 0. Requires h < pi/2.
inline double harmonic_interval_bound(double f1, double f2, double h) {
    const double s = std::sin(h);
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    const double d = f1 - f2;
    const double sh = std::sin(0.5 * h);
    const double r = std::sqrt(d * d + 4.0 * f1 * f2 * sh * sh) / s;
    // Peak of the interpolating sinusoid; if it falls outside [0, h] the
    // envelope is monotone there and the endpoints dominate.
    const double x = std::atan2(f2 - f1 * std::cos(h), f1 * s);
    const double ends = std::max(f1, f2);
    if (x >= 0.0 && x <= h) return std::max(r, ends);
    return ends;
}

struct Interval {
    double upper;
    double a, b;
    double fa, fb;
};

struct IntervalOrder {
    // max-heap on the bound; ties resolved toward the smaller left endpoint
    // so the subdivision trajectory is deterministic.
    bool operator()(const Interval& x, const Interval& y) const {
        if (x.upper != y.upper) return x.upper < y.upper;
        return x.a > y.a;
    }
};

inline double interval_upper(double a, double b, double fa, double fb, double lipschitz,
                             BoundModel model) {
    const double h = b - a;
    double u = 0.5 * (fa + fb) + 0.5 * lipschitz * h;
    if (model == BoundModel::harmonic_envelope && h < 1.5)
        u = std::min(u, harmonic_interval_bound(fa, fb, h));
    return std::max(u, std::max(fa, fb));
}

}  // namespace detail

inline CertifiedValue certified_sup(const std::function<double(double)>& f, double period,
                                    double lipschitz, const OptimizerConfig& cfg = {},
                                    BoundModel model = BoundModel::lipschitz) {
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("certified_sup: period must be positive and finite");
    if (!(lipschitz >= 0.0) || !std::isfinite(lipschitz))
        throw std::invalid_argument("certified_sup: Lipschitz bound must be finite and >= 0");
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("certified_sup: eps must be positive");
    if (cfg.max_evals < 3) throw std::invalid_argument("certified_sup: max_evals must be >= 3");

    if (lipschitz == 0.0) return {f(0.0), 0.0, 0.0};

    std::size_t evals = 0;
    double best = -std::numeric_limits<double>::infinity();
    double best_arg = 0.0;
    auto eval = [&](double x) {
        ++evals;
        const double v = f(x);
        if (v > best || (v == best && x < best_arg)) {
            best = v;
            best_arg = x;
        }
        return v;
    };

    // Initial grid: 8 intervals, each shorter than pi/2 for period <= pi so
    // the harmonic bound applies from the first round; capped so the grid
    // itself never exceeds the evaluation budget.
    const std::size_t m0 = std::min<std::size_t>(9, cfg.max_evals + 1);
    std::vector<double> xs(m0), fs(m0);
    for (std::size_t i = 0; i < m0; ++i) {
        xs[i] = period * static_cast<double>(i) / static_cast<double>(m0 - 1);
        fs[i] = (i + 1 == m0) ? fs[0] : eval(xs[i]);  // f(period) = f(0)
    }

    std::priority_queue<detail::Interval, std::vector<detail::Interval>, detail::IntervalOrder> queue;
    for (std::size_t i = 0; i + 1 < m0; ++i)
        queue.push({detail::interval_upper(xs[i], xs[i + 1], fs[i], fs[i + 1], lipschitz, model),
                    xs[i], xs[i + 1], fs[i], fs[i + 1]});

    // Round-off allowance: the objective itself is evaluated to ~1e-14
    // relative accuracy, so the certificate keeps a small pad above the
    // subdivision gap.
    auto pad = [&]() { return 1e-12 * std::max(1.0, std::abs(best)); };

    while (!queue.empty()) {
        const detail::Interval top = queue.top();
        const double gap = top.upper - best + pad();
        if (gap <= cfg.eps) return {best, best_arg, std::max(0.0, gap)};
        queue.pop();
        const double mid = 0.5 * (top.a + top.b);
        if (!(mid > top.a && mid < top.b)) continue;  // interval exhausted in doubles
        if (evals >= cfg.max_evals)
            throw UncertifiedError(best, best_arg, std::max(0.0, top.upper - best + pad()));
        const double fm = eval(mid);
        queue.push({detail::interval_upper(top.a, mid, top.fa, fm, lipschitz, model),
                    top.a, mid, top.fa, fm});
        queue.push({detail::interval_upper(mid, top.b, fm, top.fb, lipschitz, model),
                    mid, top.b, fm, top.fb});
    }
    return {best, best_arg, pad()};
}

}  // namespace omegap
