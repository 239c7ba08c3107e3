// Apache License, Version 2.0, refer to LICENSE.txt
#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace topolect::testing {

Points random_cloud(Rng& rng, size_t count, size_t dim, double scale) {
    std::uniform_real_distribution<double> coord(0.0, scale);
    Points points(count, std::vector<double>(dim));
    for (auto& p : points)
        for (auto& x : p) x = coord(rng);
    return points;
}

Points circle_points(double cx, double cy, double radius, size_t count, double jitter_sigma,
                     Rng& rng) {
    std::normal_distribution<double> jitter(0.0, jitter_sigma);
    Points points;
    points.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(count);
        points.push_back({cx + radius * std::cos(angle) + jitter(rng),
                          cy + radius * std::sin(angle) + jitter(rng)});
    }
    return points;
}

Points pretzel_cloud(size_t points_per_circle, double jitter_sigma, std::uint64_t seed) {
    Rng rng(seed);
    Points cloud;
    for (int c = 0; c < 3; ++c) {
        Points circle = circle_points(2.0 * c, 0.0, 1.0, points_per_circle, jitter_sigma, rng);
        cloud.insert(cloud.end(), circle.begin(), circle.end());
    }
    return cloud;
}

Points perturb(const Points& points, double epsilon, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> radius(0.0, epsilon);
    Points out = points;
    for (auto& p : out) {
        std::vector<double> dir(p.size());
        double norm = 0.0;
        for (auto& d : dir) { d = gauss(rng); norm += d * d; }
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        const double r = radius(rng);
        for (size_t k = 0; k < p.size(); ++k) p[k] += dir[k] / norm * r;
    }
    return out;
}

PersistenceDiagram random_diagram(Rng& rng, size_t max_points, int dim) {
    std::uniform_int_distribution<size_t> count(0, max_points);
    std::uniform_real_distribution<double> coord(0.0, 2.0);
    std::uniform_real_distribution<double> gap(1e-3, 1.5);
    PersistenceDiagram dgm;
    dgm.dim = dim;
    const size_t n = count(rng);
    for (size_t i = 0; i < n; ++i) {
        DiagramPoint p;
        p.birth = coord(rng);
        p.death = p.birth + gap(rng);
        p.birth_index = i;
        p.death_index = i;
        dgm.points.push_back(p);
    }
    return dgm;
}

Filtration random_filtration(Rng& rng, int max_vertices, int max_dim) {
    std::uniform_int_distribution<int> vertex_count(1, max_vertices);
    const int n = vertex_count(rng);
    std::uniform_int_distribution<int> simplex_count(1, 2 * n);
    std::uniform_real_distribution<double> value(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> dim_dist(0, max_dim);

    // Seed simplices, then close under faces.
    std::map<std::vector<int>, double> values;
    for (int v = 0; v < n; ++v) values[{v}] = 0.0;
    const int m = simplex_count(rng);
    for (int i = 0; i < m; ++i) {
        const int dim = std::min(dim_dist(rng), n - 1);
        std::vector<int> vertices;
        while (static_cast<int>(vertices.size()) < dim + 1) {
            const int v = pick(rng);
            if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
                vertices.push_back(v);
        }
        std::sort(vertices.begin(), vertices.end());
        values.try_emplace(vertices, value(rng));
    }
    // Faces: every subset, value capped by the coface's value from below.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [vertices, v] : std::map<std::vector<int>, double>(values)) {
            if (vertices.size() < 2) continue;
            for (size_t skip = 0; skip < vertices.size(); ++skip) {
                std::vector<int> facet;
                for (size_t i = 0; i < vertices.size(); ++i)
                    if (i != skip) facet.push_back(vertices[i]);
                auto [it, inserted] = values.try_emplace(facet, v);
                if (inserted) grew = true;
            }
        }
    }
    // Monotonicity: lift every simplex above its faces, low dimension first.
    std::vector<std::pair<std::vector<int>, double>> all(values.begin(), values.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.first.size() < b.first.size();
    });
    std::map<std::vector<int>, double> fixed;
    std::vector<FiltrationEntry> entries;
    for (auto& [vertices, v] : all) {
        double lifted = v;
        if (vertices.size() >= 2) {
            for (size_t skip = 0; skip < vertices.size(); ++skip) {
                std::vector<int> facet;
                for (size_t i = 0; i < vertices.size(); ++i)
                    if (i != skip) facet.push_back(vertices[i]);
                lifted = std::max(lifted, fixed.at(facet));
            }
        }
        fixed[vertices] = lifted;
        entries.push_back({Simplex{vertices}, lifted});
    }
    return Filtration::from_simplices(std::move(entries));
}

CategoricalTable random_complete_table(Rng& rng, size_t max_samples, size_t max_features,
                                       size_t max_categories) {
    std::uniform_int_distribution<size_t> sample_count(2, max_samples);
    std::uniform_int_distribution<size_t> feature_count(2, max_features);
    const size_t rows = sample_count(rng);
    const size_t cols = feature_count(rng);

    CategoricalTable table;
    for (size_t s = 0; s < rows; ++s) table.sample_ids.push_back("s" + std::to_string(s));
    for (size_t f = 0; f < cols; ++f) table.feature_ids.push_back("f" + std::to_string(f));
    table.category_labels.resize(cols);
    std::uniform_int_distribution<size_t> cat_count(2, max_categories);
    std::vector<size_t> categories(cols);
    for (size_t f = 0; f < cols; ++f) {
        categories[f] = cat_count(rng);
        for (size_t c = 0; c < categories[f]; ++c)
            table.category_labels[f].push_back(std::to_string(c));
    }
    table.cells.resize(rows * cols);
    for (size_t s = 0; s < rows; ++s)
        for (size_t f = 0; f < cols; ++f) {
            std::uniform_int_distribution<int> cat(0, static_cast<int>(categories[f]) - 1);
            table.cell(s, f) = cat(rng);
        }
    // Guarantee at least two observed categories per feature so nothing is
    // constant by accident.
    for (size_t f = 0; f < cols; ++f) {
        bool varied = false;
        for (size_t s = 1; s < rows; ++s)
            if (table.cell(s, f) != table.cell(0, f)) { varied = true; break; }
        if (!varied) table.cell(rows - 1, f) = (table.cell(0, f) + 1) %
                                               static_cast<int>(categories[f]);
    }
    return table;
}

CategoricalTable random_table_with_missing(Rng& rng, size_t samples, size_t features,
                                           double missing_fraction) {
    CategoricalTable table;
    for (size_t s = 0; s < samples; ++s) table.sample_ids.push_back("s" + std::to_string(s));
    for (size_t f = 0; f < features; ++f) table.feature_ids.push_back("f" + std::to_string(f));
    table.category_labels.assign(features, {"0", "1", "2"});
    std::uniform_int_distribution<int> cat(0, 2);
    std::uniform_real_distribution<double> miss(0.0, 1.0);
    table.cells.resize(samples * features);
    for (size_t s = 0; s < samples; ++s)
        for (size_t f = 0; f < features; ++f)
            table.cell(s, f) = miss(rng) < missing_fraction ? kMissing : cat(rng);
    // Keep every feature imputable.
    for (size_t f = 0; f < features; ++f) {
        bool observed = false;
        for (size_t s = 0; s < samples; ++s)
            if (table.cell(s, f) != kMissing) { observed = true; break; }
        if (!observed) table.cell(0, f) = cat(rng);
    }
    return table;
}

} // namespace topolect::testing
