// Schatten exponent p in [1, inf], with infinity as a distinguished value.
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "omegap/detail/format.hpp"

namespace omegap {

class PNorm {
public:
    static PNorm finite(double p) {
        if (!std::isfinite(p) || p < 1.0)
            throw std::invalid_argument("PNorm: finite exponent must satisfy p >= 1");
        return PNorm(p, false);
    }

    static PNorm infinity() { return PNorm(0.0, true); }

    /// Accepts "inf" or a decimal exponent >= 1.
    static PNorm parse(const std::string& s) {
        if (s == "inf") return infinity();
        std::size_t pos = 0;
        double p = 0.0;
        try {
            p = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("PNorm: cannot parse exponent '" + s + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("PNorm: cannot parse exponent '" + s + "'");
        if (std::isinf(p)) return infinity();
        return finite(p);
    }

    bool is_infinity() const { return inf_; }

    double value() const {
        if (inf_) throw std::logic_error("PNorm: value() called on the infinite exponent");
        return p_;
    }

    /// 2^{1/p}, with the p = inf limit 1.
    double two_pow_inv() const { return inf_ ? 1.0 : std::pow(2.0, 1.0 / p_); }

    std::string to_string() const { return inf_ ? "inf" : detail::format_double(p_); }

    friend bool operator==(const PNorm& a, const PNorm& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
    }

private:
    PNorm(double p, bool inf) : p_(p), inf_(inf) {}
    double p_;
    bool inf_;
};

}  // namespace omegap
