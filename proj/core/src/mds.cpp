// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/mds.hpp"

#include "topolect/error.hpp"
#include "topolect/symmetric_eigen.hpp"

#include <cmath>

namespace topolect {

Embedding classical_mds(const Matrix& distances, size_t k,
                        const std::vector<std::string>& labels) {
    const size_t n = distances.rows();
    if (distances.cols() != n) throw Error("mds: distance matrix must be square");
    if (!distances.is_symmetric(1e-9)) throw Error("mds: distance matrix must be symmetric");
    for (size_t i = 0; i < n; ++i) {
        if (std::abs(distances(i, i)) > 1e-12) throw Error("mds: diagonal must be zero");
        for (size_t j = 0; j < n; ++j)
            if (distances(i, j) < 0) throw Error("mds: distances must be non-negative");
    }
    if (k < 1 || k > n - 1)
        throw Error("mds: target dimension must lie in [1," + std::to_string(n - 1) + "]");
    if (!labels.empty() && labels.size() != n)
        throw Error("mds: label count does not match matrix size");

    // Double centering of -D^2 / 2.
    Matrix g(n, n);
    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const double d2 = distances(i, j) * distances(i, j);
            g(i, j) = -0.5 * d2;
            row_mean[i] += g(i, j);
        }
        row_mean[i] /= static_cast<double>(n);
        grand += row_mean[i];
    }
    grand /= static_cast<double>(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g(i, j) += grand - row_mean[i] - row_mean[j];
    // Symmetrize against floating noise before the eigensolve.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (g(i, j) + g(j, i));
            g(i, j) = g(j, i) = v;
        }

    const EigenDecomposition eig = symmetric_eigen(g);
    // Spectrum entries at rounding level are not usable axes.
    const double floor = 1e-12 * std::max(1.0, std::abs(eig.eigenvalues.front()));

    Embedding out;
    out.labels = labels.empty() ? std::vector<std::string>(n) : labels;
    out.coordinates = Matrix(n, k);
    for (size_t axis = 0; axis < k; ++axis) {
        const double lambda = eig.eigenvalues[axis];
        if (lambda <= floor) {
            out.truncated = true;
            out.eigenvalues_used.push_back(0.0);
            continue; // column stays zero
        }
        out.eigenvalues_used.push_back(lambda);
        const double scale = std::sqrt(lambda);
        for (size_t i = 0; i < n; ++i)
            out.coordinates(i, axis) = scale * eig.eigenvectors(i, axis);
    }

    double residual = 0.0, total = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (size_t axis = 0; axis < k; ++axis) {
                const double diff = out.coordinates(i, axis) - out.coordinates(j, axis);
                sum += diff * diff;
            }
            const double embedded = std::sqrt(sum);
            residual += (distances(i, j) - embedded) * (distances(i, j) - embedded);
            total += distances(i, j) * distances(i, j);
        }
    out.stress = total > 0.0 ? std::sqrt(residual / total) : 0.0;
    return out;
}

} // namespace topolect
