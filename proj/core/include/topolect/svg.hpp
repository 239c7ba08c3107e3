// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/cloud.hpp"
#include "topolect/mds.hpp"
#include "topolect/persistence.hpp"

#include <map>
#include <string>
#include <vector>

namespace topolect {

enum class PlotKind { kScree, kScatter, kSubcloud, kDiagram, kMds2d, kMds3d };

struct PlotSpec {
    PlotKind kind = PlotKind::kScatter;
    std::string title;
    int width = 640;
    int height = 480;
    bool point_labels = false;
    /// point label -> fill color; unlisted labels use the default fill
    std::map<std::string, std::string> group_colors;
};

/// Each renderer emits a standalone SVG 1.1 document; every input datum
/// becomes exactly one marker element with an id of the form m<i>. Output is
/// byte-deterministic for identical inputs.

/// kScree: one bar per component share, in the given order.
std::string render_plot(const PlotSpec& spec, const std::vector<double>& shares);

/// kScatter or kSubcloud: the first two coordinates of each point.
std::string render_plot(const PlotSpec& spec, const PointCloud& cloud);
std::string render_plot(const PlotSpec& spec, const SubCloud& cloud);

/// kDiagram: (birth, death) markers above the drawn diagonal; essential
/// classes sit at 1.05x the largest finite death with a square marker.
std::string render_plot(const PlotSpec& spec, const PersistenceDiagram& diagram);

/// kMds2d: first two axes. kMds3d: first two axes with the third encoded as
/// marker size.
std::string render_plot(const PlotSpec& spec, const Embedding& embedding);

} // namespace topolect
