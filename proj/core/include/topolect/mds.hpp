// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/matrix.hpp"

#include <string>
#include <vector>

namespace topolect {

struct Embedding {
    std::vector<std::string> labels;
    Matrix coordinates;                 // n x k
    std::vector<double> eigenvalues_used; // descending, k values
    double stress = 0.0;                // ||D - D_hat||_F / ||D||_F
    /// True when fewer than k positive eigenvalues were available and the
    /// remaining axes were zero-padded.
    bool truncated = false;
};

/// Classical (Torgerson) multidimensional scaling: double-center -D^2/2,
/// take the top-k non-negative eigenpairs, scale eigenvectors by the square
/// roots of their eigenvalues. Axes beyond the available positive spectrum
/// are zero and flagged.
Embedding classical_mds(const Matrix& distances, size_t k,
                        const std::vector<std::string>& labels = {});

} // namespace topolect
