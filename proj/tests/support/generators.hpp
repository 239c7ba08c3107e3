// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/persistence.hpp"
#include "topolect/table.hpp"

#include <random>
#include <vector>

namespace topolect::testing {

using Rng = std::mt19937_64;
using Points = std::vector<std::vector<double>>;

/// Uniform points in the [0, scale]^dim cube.
Points random_cloud(Rng& rng, size_t count, size_t dim, double scale = 1.0);

/// Evenly spaced points on a circle with Gaussian jitter per coordinate.
Points circle_points(double cx, double cy, double radius, size_t count, double jitter_sigma,
                     Rng& rng);

/// Three pairwise-adjacent unit circles in a row, the classic three-loop
/// test cloud.
Points pretzel_cloud(size_t points_per_circle, double jitter_sigma, std::uint64_t seed);

/// Move every point by an independent random vector of norm at most epsilon.
Points perturb(const Points& points, double epsilon, Rng& rng);

/// Random diagram of a given dimension with finite points (birth < death).
PersistenceDiagram random_diagram(Rng& rng, size_t max_points, int dim = 1);

/// Random filtration on at most max_vertices vertices, closed under faces
/// and with monotone values.
Filtration random_filtration(Rng& rng, int max_vertices = 8, int max_dim = 3);

/// Complete random table: every cell observed.
CategoricalTable random_complete_table(Rng& rng, size_t max_samples, size_t max_features,
                                       size_t max_categories = 4);

/// Random table with a given fraction of missing cells.
CategoricalTable random_table_with_missing(Rng& rng, size_t samples, size_t features,
                                           double missing_fraction);

} // namespace topolect::testing
