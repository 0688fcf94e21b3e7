// Seeded random matrix generators. Every generator is a pure function of
// (kind, n, seed): the stream is SplitMix64 and complex Gaussians are drawn
// as sqrt(-ln u1) * e^{2*pi*i*u2}, so entries have independent real and
// imaginary parts of variance 1/2 each (standard complex normal).
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "omegap/matrix.hpp"

namespace omegap {

/// SplitMix64: the 64-bit stream behind all generators.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1): (k + 0.5) * 2^-53 over the top 53 bits.
    double next_unit() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    Complex next_complex_gaussian() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double mag = std::sqrt(-std::log(u1));
        return Complex(mag * std::cos(2.0 * M_PI * u2), mag * std::sin(2.0 * M_PI * u2));
    }
};

/// Stateless 64-bit mix (SplitMix64 finalizer), used for seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

enum class MatrixKind { ginibre, hermitian, unitary, nilpotent_upper, scaled_ginibre };

inline std::string kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::ginibre: return "ginibre";
        case MatrixKind::hermitian: return "hermitian";
        case MatrixKind::unitary: return "unitary";
        case MatrixKind::nilpotent_upper: return "nilpotent_upper";
        case MatrixKind::scaled_ginibre: return "scaled_ginibre";
    }
    return "?";
}

inline MatrixKind parse_kind(const std::string& s) {
    if (s == "ginibre") return MatrixKind::ginibre;
    if (s == "hermitian") return MatrixKind::hermitian;
    if (s == "unitary") return MatrixKind::unitary;
    if (s == "nilpotent_upper") return MatrixKind::nilpotent_upper;
    if (s == "scaled_ginibre") return MatrixKind::scaled_ginibre;
    throw std::invalid_argument("unknown matrix kind '" + s + "'");
}

namespace detail {

inline ComplexMatrix ginibre_sample(std::size_t n, SplitMix64& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
    return g;
}

// Modified Gram-Schmidt with one reorthogonalization pass; columns of the
// result are orthonormal to well below the 1e-12 construction contract.
inline ComplexMatrix orthonormalize_columns(ComplexMatrix g) {
    const std::size_t n = g.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
                for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) {
            // Probability-zero degenerate draw: fall back to a unit column.
            g(j, j) = 1.0;
            nrm = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    return g;
}

}  // namespace detail

/// Deterministic function of (kind, n, seed); sigma applies to scaled_ginibre only.
inline ComplexMatrix random_matrix(MatrixKind kind, std::size_t n, std::uint64_t seed, double sigma = 1.0) {
    if (n == 0) throw std::invalid_argument("random_matrix: dimension must be positive");
    SplitMix64 rng(seed);
    switch (kind) {
        case MatrixKind::ginibre:
            return detail::ginibre_sample(n, rng);
        case MatrixKind::scaled_ginibre: {
            ComplexMatrix g = detail::ginibre_sample(n, rng);
            return Complex(sigma, 0.0) * g;
        }
        case MatrixKind::hermitian: {
            ComplexMatrix g = detail::ginibre_sample(n, rng);
            ComplexMatrix h(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
            return h;
        }
        case MatrixKind::unitary:
            return detail::orthonormalize_columns(detail::ginibre_sample(n, rng));
        case MatrixKind::nilpotent_upper: {
            ComplexMatrix g(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
            return g;
        }
    }
    throw std::logic_error("random_matrix: unreachable");
}

}  // namespace omegap
