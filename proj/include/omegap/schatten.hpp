// Singular values and Schatten p-norms. The SVD is delegated to Eigen's
// two-sided Jacobi solver, which meets the 1e-10 relative accuracy contract
// with a wide margin on the desk-scale matrices this library targets.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <vector>

#include "omegap/matrix.hpp"
#include "omegap/pnorm.hpp"

namespace omegap {

/// Singular values sorted descending; length min(rows, cols).
struct SingularSpectrum {
    std::vector<double> values;

    double largest() const { return values.empty() ? 0.0 : values.front(); }
};

inline SingularSpectrum singular_values(const ComplexMatrix& a) {
    if (!a.is_finite())
        throw std::invalid_argument("singular_values: matrix has non-finite entries");
    using RowMajorXcd = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajorXcd> m(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                                    static_cast<Eigen::Index>(a.cols()));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    SingularSpectrum s;
    s.values.resize(static_cast<std::size_t>(svd.singularValues().size()));
    for (std::size_t k = 0; k < s.values.size(); ++k)
        s.values[k] = std::max(0.0, svd.singularValues()(static_cast<Eigen::Index>(k)));
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

/// (sum sigma_k^p)^{1/p} evaluated with the largest singular value factored
/// out, so very large finite p cannot overflow; p = inf gives sigma_max.
inline double schatten(const SingularSpectrum& s, const PNorm& p) {
    const double smax = s.largest();
    if (smax == 0.0) return 0.0;
    if (p.is_infinity()) return smax;
    const double pv = p.value();
    double acc = 0.0;
    for (double v : s.values) acc += std::pow(v / smax, pv);
    return smax * std::pow(acc, 1.0 / pv);
}

inline double schatten(const ComplexMatrix& a, const PNorm& p) {
    return schatten(singular_values(a), p);
}

}  // namespace omegap
