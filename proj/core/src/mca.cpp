// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/mca.hpp"

#include "topolect/error.hpp"

#include <cmath>

namespace topolect {

IndicatorMatrix indicator_matrix(const CategoricalTable& table) {
    if (table.has_missing())
        throw Error("mca: table has missing cells; impute before building the indicator matrix");

    IndicatorMatrix z;
    z.row_ids = table.sample_ids;
    z.feature_count = table.feature_count();

    // Column layout: features in table order, observed codes ascending
    // within each feature. Unobserved categories are dropped.
    std::vector<std::vector<int>> column_of_code(table.feature_count());
    for (size_t f = 0; f < table.feature_count(); ++f) {
        const size_t n_codes = table.category_labels[f].size();
        std::vector<bool> seen(n_codes, false);
        for (size_t s = 0; s < table.sample_count(); ++s)
            seen[static_cast<size_t>(table.cell(s, f))] = true;
        column_of_code[f].assign(n_codes, -1);
        for (size_t c = 0; c < n_codes; ++c) {
            if (!seen[c]) continue;
            column_of_code[f][c] = static_cast<int>(z.columns.size());
            z.columns.push_back({table.feature_ids[f], static_cast<int>(c),
                                 table.category_labels[f][c]});
        }
    }

    z.entries.assign(table.sample_count() * z.columns.size(), 0);
    for (size_t s = 0; s < table.sample_count(); ++s)
        for (size_t f = 0; f < table.feature_count(); ++f) {
            const int col = column_of_code[f][static_cast<size_t>(table.cell(s, f))];
            z.entries[s * z.cols() + static_cast<size_t>(col)] = 1;
        }
    return z;
}

Matrix burt_matrix(const IndicatorMatrix& z) {
    const size_t j = z.cols();
    Matrix b(j, j);
    for (size_t s = 0; s < z.rows(); ++s) {
        // Rows of Z are sparse: one 1 per feature.
        std::vector<size_t> ones;
        ones.reserve(z.feature_count);
        for (size_t c = 0; c < j; ++c)
            if (z.at(s, c)) ones.push_back(c);
        for (size_t a : ones)
            for (size_t c : ones) b(a, c) += 1.0;
    }
    return b;
}

McaModel mca_adjusted(const Matrix& burt, size_t feature_count,
                      const std::vector<CategoryKey>& columns) {
    if (burt.rows() != burt.cols()) throw Error("mca: Burt matrix must be square");
    if (!burt.is_symmetric(1e-10)) throw Error("mca: Burt matrix is not symmetric");
    if (feature_count < 2) throw Error("mca: need at least two features");
    const size_t j = burt.rows();
    const double q = static_cast<double>(feature_count);

    double grand = 0.0;
    for (size_t a = 0; a < j; ++a)
        for (size_t b = 0; b < j; ++b) grand += burt(a, b);
    if (grand <= 0.0) throw Error("mca: Burt matrix has no mass");

    McaModel model;
    model.columns = columns;
    model.feature_count = feature_count;
    model.row_masses.resize(j);
    for (size_t a = 0; a < j; ++a) {
        double total = 0.0;
        for (size_t b = 0; b < j; ++b) total += burt(a, b);
        model.row_masses[a] = total / grand;
        if (model.row_masses[a] <= 0.0)
            throw Error("mca: zero row mass at column " + std::to_string(a) +
                        "; drop empty categories before the analysis");
    }

    Matrix s(j, j);
    for (size_t a = 0; a < j; ++a)
        for (size_t b = 0; b < j; ++b) {
            const double p = burt(a, b) / grand;
            const double expected = model.row_masses[a] * model.row_masses[b];
            s(a, b) = (p - expected) / std::sqrt(expected);
        }

    EigenDecomposition eig = symmetric_eigen(s);
    model.eigenvalues = std::move(eig.eigenvalues);
    model.eigenvectors = std::move(eig.eigenvectors);

    model.adjusted_inertias.resize(j);
    std::vector<double> adjusted_singular(j);
    const double inv_q = 1.0 / q;
    const double factor = q / (q - 1.0);
    for (size_t c = 0; c < j; ++c) {
        const double lambda = model.eigenvalues[c];
        if (lambda > inv_q) {
            adjusted_singular[c] = factor * (lambda - inv_q);
            model.adjusted_inertias[c] = adjusted_singular[c] * adjusted_singular[c];
        } else {
            adjusted_singular[c] = 0.0;
            model.adjusted_inertias[c] = 0.0;
        }
    }

    model.coordinates = Matrix(j, j);
    for (size_t a = 0; a < j; ++a) {
        const double dr = 1.0 / std::sqrt(model.row_masses[a]);
        for (size_t c = 0; c < j; ++c)
            model.coordinates(a, c) = dr * model.eigenvectors(a, c) * adjusted_singular[c];
    }

    double sum_sq = 0.0;
    for (double lambda : model.eigenvalues) sum_sq += lambda * lambda;
    model.adjusted_total =
        factor * (sum_sq - (static_cast<double>(j) - q) / (q * q));
    return model;
}

McaModel mca_fit(const CategoricalTable& table) {
    IndicatorMatrix z = indicator_matrix(table);
    McaModel model = mca_adjusted(burt_matrix(z), z.feature_count, z.columns);
    return model;
}

std::vector<double> variance_percentages(const McaModel& model) {
    if (model.adjusted_total <= 0.0)
        throw Error("mca: adjusted total variance is not positive; the table is degenerate");
    std::vector<double> out(model.adjusted_inertias.size());
    for (size_t c = 0; c < out.size(); ++c)
        out[c] = model.adjusted_inertias[c] / model.adjusted_total;
    return out;
}

} // namespace topolect
