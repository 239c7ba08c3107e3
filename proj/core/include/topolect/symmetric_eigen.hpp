// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/matrix.hpp"

#include <vector>

namespace topolect {

struct EigenDecomposition {
    /// Sorted descending; ties keep their original index order.
    std::vector<double> eigenvalues;
    /// Column j is the eigenvector of eigenvalues[j]; columns orthonormal.
    /// Each column is flipped so its largest-magnitude entry is positive.
    Matrix eigenvectors;
};

struct JacobiOptions {
    /// Relative off-diagonal Frobenius tolerance.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Throws when the
/// input is not symmetric (within 1e-10) or the sweep budget runs out, with
/// the remaining off-diagonal residual in the message.
EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& options = {});

} // namespace topolect
