// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/symmetric_eigen.hpp"

#include "topolect/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace topolect {

EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& options) {
    if (!s.is_symmetric(1e-10))
        throw Error("eigen: matrix is not symmetric within 1e-10");
    const size_t n = s.rows();
    Matrix a = s;
    Matrix v = Matrix::identity(n);

    const double scale = std::max(1.0, s.frobenius_norm());
    const double threshold = options.tolerance * scale;

    int sweep = 0;
    while (a.off_diagonal_norm() > threshold) {
        if (sweep++ >= options.max_sweeps)
            throw Error("eigen: Jacobi failed to converge in " +
                        std::to_string(options.max_sweeps) + " sweeps, off-diagonal residual " +
                        std::to_string(a.off_diagonal_norm()));
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) { a(p, q) = a(q, p) = 0.0; continue; }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - sn * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + sn * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - sn * (vrq + tau * vrp);
                    v(r, q) = vrq + sn * (vrp - tau * vrq);
                }
            }
        }
    }

    // Sort descending, stable in the original index on ties.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (size_t j = 0; j < n; ++j) {
        const size_t src = order[j];
        out.eigenvalues[j] = a(src, src);
        size_t arg = 0;
        for (size_t i = 1; i < n; ++i)
            if (std::abs(v(i, src)) > std::abs(v(arg, src))) arg = i;
        const double flip = v(arg, src) < 0 ? -1.0 : 1.0;
        for (size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = flip * v(i, src);
    }
    return out;
}

} // namespace topolect
