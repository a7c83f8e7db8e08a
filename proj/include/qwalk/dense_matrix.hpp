#pragma once

// Deliberately naive dense complex matrices: row-major storage, cubic
// multiply. Everything that uses these runs at desk scale (dimension a few
// thousand at most), where clarity beats performance.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    DenseMatrix operator*(const DenseMatrix& rhs) const {
        if (cols_ != rhs.rows_) {
            throw std::invalid_argument("matrix product shape mismatch");
        }
        DenseMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Complex a = at(i, k);
                if (a == Complex{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out.at(i, j) += a * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    DenseMatrix adjoint() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return out;
}

inline DenseMatrix matrix_power(DenseMatrix base, unsigned long long exponent) {
    if (base.rows() != base.cols()) {
        throw std::invalid_argument("matrix power needs a square matrix");
    }
    DenseMatrix result = DenseMatrix::identity(base.rows());
    while (exponent > 0) {
        if (exponent & 1ULL) result = result * base;
        exponent >>= 1ULL;
        if (exponent > 0) base = base * base;
    }
    return result;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix comparison shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

/// Max-entry deviation of U†U from the identity.
inline double unitarity_defect(const DenseMatrix& u) {
    return max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.cols()));
}

}  // namespace qwalk
