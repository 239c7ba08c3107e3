// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/matrix.hpp"
#include "topolect/symmetric_eigen.hpp"
#include "topolect/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace topolect {

/// One column of the indicator matrix: a concrete category of a feature.
struct CategoryKey {
    std::string feature_id;
    int code = 0;
    std::string label;

    /// Display name used for plot labels, e.g. "GB054:1".
    std::string display() const { return feature_id + ":" + label; }

    bool operator==(const CategoryKey&) const = default;
};

/// Samples x categories 0/1 matrix with exactly one 1 per feature per row.
/// Categories that occur in no sample are dropped from the column set.
struct IndicatorMatrix {
    std::vector<std::uint8_t> entries; // row-major, I x J
    std::vector<std::string> row_ids;
    std::vector<CategoryKey> columns;
    size_t feature_count = 0; // Q

    size_t rows() const { return row_ids.size(); }
    size_t cols() const { return columns.size(); }
    std::uint8_t at(size_t i, size_t j) const { return entries[i * cols() + j]; }
};

/// Output of the adjusted correspondence analysis of the Burt matrix.
///
/// `coordinates` row j holds the principal coordinates of category j; only
/// components whose eigenvalue clears the 1/Q threshold contribute nonzero
/// axes. `eigenvectors` columns are orthonormal.
struct McaModel {
    std::vector<CategoryKey> columns;
    size_t feature_count = 0; // Q
    std::vector<double> row_masses;       // r, length J
    std::vector<double> eigenvalues;      // lambda, descending
    std::vector<double> adjusted_inertias; // lambda-tilde squared
    Matrix eigenvectors;                  // V, J x J
    Matrix coordinates;                   // F = D_r^{-1/2} V diag(lambda-tilde)
    double adjusted_total = 0.0;          // tau

    size_t dimension() const { return eigenvalues.size(); }
};

/// Build the indicator matrix of a complete table. Throws if any cell is
/// missing (impute first).
IndicatorMatrix indicator_matrix(const CategoricalTable& table);

/// B = Z^T Z. Symmetric, integral entries; the grand total is I * Q^2.
Matrix burt_matrix(const IndicatorMatrix& z);

/// Adjusted correspondence analysis of a Burt matrix:
/// P = B / grand total, r = row totals of P,
/// S = (P - r r^T) / sqrt(r r^T) entrywise, S = V diag(lambda) V^T,
/// adjusted inertia (Q/(Q-1))^2 (lambda - 1/Q)^2 for lambda > 1/Q else 0,
/// F = D_r^{-1/2} V diag(lambda-tilde),
/// tau = Q/(Q-1) (sum lambda^2 - (J-Q)/Q^2).
McaModel mca_adjusted(const Matrix& burt, size_t feature_count,
                      const std::vector<CategoryKey>& columns = {});

/// Convenience: indicator + Burt + analysis in one call.
McaModel mca_fit(const CategoricalTable& table);

/// Share of adjusted total variance per component. Throws when the adjusted
/// total is not positive (degenerate table).
std::vector<double> variance_percentages(const McaModel& model);

} // namespace topolect
