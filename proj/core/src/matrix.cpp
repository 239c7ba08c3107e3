// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/matrix.hpp"

#include "topolect/error.hpp"

#include <cmath>

namespace topolect {

bool Matrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

double Matrix::off_diagonal_norm() const {
    double sum = 0.0;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j) sum += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(sum);
}

Matrix Matrix::multiply(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix: dimension mismatch in multiply");
    Matrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

} // namespace topolect
