// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/mca.hpp"
#include "topolect/table.hpp"

#include <string>
#include <vector>

namespace topolect {

struct LabeledPoint {
    std::string label;
    std::vector<double> coords;

    bool operator==(const LabeledPoint&) const = default;
};

/// A finite set of labeled points in a fixed-dimensional Euclidean space.
struct PointCloud {
    size_t dimension = 0;
    std::vector<LabeledPoint> points;
};

/// The per-language slice of the category cloud: one point per feature,
/// namely the category point of the language's value of that feature.
struct SubCloud {
    std::string language_id;
    size_t dimension = 0;
    std::vector<LabeledPoint> points;
    std::vector<CategoryKey> source_categories;
};

/// All category points, truncated to the leading d coordinates.
PointCloud full_cloud(const McaModel& model, size_t d);

/// The sub-point cloud of one language. The table must be complete and must
/// be the table the model was fitted on.
SubCloud subcloud(const McaModel& model, const CategoricalTable& table,
                  const std::string& language_id, size_t d);

} // namespace topolect
