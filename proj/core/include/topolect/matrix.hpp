// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstddef>
#include <vector>

namespace topolect {

/// Dense row-major matrix of doubles; just enough for the numerics here.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    bool is_symmetric(double tol) const;
    /// Frobenius norm of the whole matrix.
    double frobenius_norm() const;
    /// Frobenius norm of the off-diagonal part (square matrices).
    double off_diagonal_norm() const;

    Matrix multiply(const Matrix& other) const;

    bool operator==(const Matrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace topolect
