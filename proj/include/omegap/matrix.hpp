// Dense complex matrices and the block constructions used throughout the
// library: adjoint, Cartesian parts, phase rotation, direct sums,
// off-diagonal 2x2 assembly and block extraction.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Values are immutable in spirit:
/// every operation returns a new matrix, nothing here mutates shared state.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ComplexMatrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    bool is_finite() const {
        for (const auto& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs_entry() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        require_same_shape(a, b, "operator+");
        ComplexMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        require_same_shape(a, b, "operator-");
        ComplexMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a) {
        ComplexMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
        return r;
    }

    friend ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
        ComplexMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = c * a.data_[k];
        return r;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, Complex c) { return c * a; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("operator*: inner dimensions differ");
        ComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

private:
    static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

/// Partition of an (grid*block_dim) square matrix into grid^2 square blocks.
struct BlockPartition {
    std::size_t grid;
    std::size_t block_dim;

    BlockPartition(std::size_t g, std::size_t m) : grid(g), block_dim(m) {
        if (g == 0 || m == 0)
            throw std::invalid_argument("BlockPartition: grid and block_dim must be positive");
    }

    std::size_t matrix_dim() const { return grid * block_dim; }
};

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square())
        throw std::invalid_argument(std::string(op) + ": matrix must be square");
}

/// Hermitian part (A + A*)/2.
inline ComplexMatrix re_part(const ComplexMatrix& a) {
    require_square(a, "re_part");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

/// Skew part (A - A*)/(2i); Hermitian, and A = re_part(A) + i*im_part(A).
inline ComplexMatrix im_part(const ComplexMatrix& a) {
    require_square(a, "im_part");
    ComplexMatrix r(a.rows(), a.cols());
    const Complex inv2i(0.0, -0.5);  // 1/(2i)
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = inv2i * (a(i, j) - std::conj(a(j, i)));
    return r;
}

/// Entrywise multiplication by e^{i theta}.
inline ComplexMatrix rotate(const ComplexMatrix& a, double theta) {
    return std::polar(1.0, theta) * a;
}

/// Block diagonal [[A, 0], [0, B]].
inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "direct_sum");
    require_square(b, "direct_sum");
    const std::size_t na = a.rows(), nb = b.rows();
    ComplexMatrix r(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) r(na + i, na + j) = b(i, j);
    return r;
}

/// [[0, A], [B, 0]] for square A, B of equal dimension.
inline ComplexMatrix off_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "off_diag");
    require_square(b, "off_diag");
    if (a.rows() != b.rows())
        throw std::invalid_argument("off_diag: blocks must have equal dimension");
    const std::size_t n = a.rows();
    ComplexMatrix r(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r(i, n + j) = a(i, j);
            r(n + i, j) = b(i, j);
        }
    return r;
}

/// Assembled [[A11, A12], [A21, A22]], all blocks square of equal dimension.
inline ComplexMatrix block2(const ComplexMatrix& a11, const ComplexMatrix& a12,
                            const ComplexMatrix& a21, const ComplexMatrix& a22) {
    const ComplexMatrix* blocks[4] = {&a11, &a12, &a21, &a22};
    const std::size_t n = a11.rows();
    for (const auto* b : blocks) {
        require_square(*b, "block2");
        if (b->rows() != n)
            throw std::invalid_argument("block2: blocks must have equal dimension");
    }
    ComplexMatrix r(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = a11(i, j);
            r(i, n + j) = a12(i, j);
            r(n + i, j) = a21(i, j);
            r(n + i, n + j) = a22(i, j);
        }
    return r;
}

/// Row-major grid of the grid^2 blocks of T; reassembly is exact.
inline std::vector<ComplexMatrix> extract_blocks(const ComplexMatrix& t, const BlockPartition& part) {
    require_square(t, "extract_blocks");
    if (t.rows() != part.matrix_dim())
        throw std::invalid_argument("extract_blocks: matrix dimension does not match partition");
    std::vector<ComplexMatrix> out;
    out.reserve(part.grid * part.grid);
    const std::size_t m = part.block_dim;
    for (std::size_t bi = 0; bi < part.grid; ++bi)
        for (std::size_t bj = 0; bj < part.grid; ++bj) {
            ComplexMatrix blk(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) blk(i, j) = t(bi * m + i, bj * m + j);
            out.push_back(std::move(blk));
        }
    return out;
}

/// Inverse of extract_blocks.
inline ComplexMatrix assemble_blocks(const std::vector<ComplexMatrix>& blocks, const BlockPartition& part) {
    if (blocks.size() != part.grid * part.grid)
        throw std::invalid_argument("assemble_blocks: wrong number of blocks");
    const std::size_t m = part.block_dim;
    ComplexMatrix t(part.matrix_dim(), part.matrix_dim());
    for (std::size_t bi = 0; bi < part.grid; ++bi)
        for (std::size_t bj = 0; bj < part.grid; ++bj) {
            const ComplexMatrix& blk = blocks[bi * part.grid + bj];
            if (blk.rows() != m || blk.cols() != m)
                throw std::invalid_argument("assemble_blocks: block dimension mismatch");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) t(bi * m + i, bj * m + j) = blk(i, j);
        }
    return t;
}

}  // namespace omegap
