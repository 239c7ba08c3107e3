// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/svg.hpp"

#include "topolect/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace topolect {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

constexpr double kMargin = 48.0;

struct Frame {
    const PlotSpec& spec;
    double min_x, max_x, min_y, max_y;
    std::string body;

    Frame(const PlotSpec& s, double x0, double x1, double y0, double y1)
        : spec(s), min_x(x0), max_x(x1), min_y(y0), max_y(y1) {
        if (max_x - min_x < 1e-12) { min_x -= 1.0; max_x += 1.0; }
        if (max_y - min_y < 1e-12) { min_y -= 1.0; max_y += 1.0; }
    }

    double sx(double x) const {
        return kMargin + (x - min_x) / (max_x - min_x) * (spec.width - 2 * kMargin);
    }
    double sy(double y) const {
        return spec.height - kMargin -
               (y - min_y) / (max_y - min_y) * (spec.height - 2 * kMargin);
    }

    void line(double x0, double y0, double x1, double y1, const std::string& color,
              const std::string& dash = "") {
        body += "  <line x1=\"" + px(x0) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x1) +
                "\" y2=\"" + px(y1) + "\" stroke=\"" + color + "\"";
        if (!dash.empty()) body += " stroke-dasharray=\"" + dash + "\"";
        body += "/>\n";
    }

    void marker(size_t index, double x, double y, double radius, const std::string& fill,
                bool square = false) {
        const std::string id = "m" + std::to_string(index);
        if (square) {
            body += "  <rect id=\"" + id + "\" x=\"" + px(sx(x) - radius) + "\" y=\"" +
                    px(sy(y) - radius) + "\" width=\"" + px(2 * radius) + "\" height=\"" +
                    px(2 * radius) + "\" fill=\"" + fill + "\"/>\n";
        } else {
            body += "  <circle id=\"" + id + "\" cx=\"" + px(sx(x)) + "\" cy=\"" + px(sy(y)) +
                    "\" r=\"" + px(radius) + "\" fill=\"" + fill + "\"/>\n";
        }
    }

    void text(double x, double y, const std::string& content, int size = 10,
              const std::string& anchor = "start") {
        body += "  <text x=\"" + px(x) + "\" y=\"" + px(y) + "\" font-size=\"" +
                std::to_string(size) + "\" text-anchor=\"" + anchor +
                "\" font-family=\"sans-serif\">" + xml_escape(content) + "</text>\n";
    }

    void axes() {
        line(kMargin, spec.height - kMargin, spec.width - kMargin, spec.height - kMargin,
             "#333333");
        line(kMargin, kMargin, kMargin, spec.height - kMargin, "#333333");
    }

    std::string document() const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
               "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
               std::to_string(spec.height) + "\">\n";
        out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

void add_title(Frame& frame) {
    if (!frame.spec.title.empty())
        frame.text(frame.spec.width / 2.0, kMargin / 2.0, frame.spec.title, 13, "middle");
}

std::string color_for(const PlotSpec& spec, const std::string& label) {
    auto it = spec.group_colors.find(label);
    return it == spec.group_colors.end() ? "#1f6fb5" : it->second;
}

std::string render_points(const PlotSpec& spec,
                          const std::vector<LabeledPoint>& points) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& p : points) {
        const double x = p.coords.empty() ? 0.0 : p.coords[0];
        const double y = p.coords.size() < 2 ? 0.0 : p.coords[1];
        if (first) { min_x = max_x = x; min_y = max_y = y; first = false; }
        min_x = std::min(min_x, x); max_x = std::max(max_x, x);
        min_y = std::min(min_y, y); max_y = std::max(max_y, y);
    }
    Frame frame(spec, min_x, max_x, min_y, max_y);
    frame.axes();
    add_title(frame);
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        const double x = p.coords.empty() ? 0.0 : p.coords[0];
        const double y = p.coords.size() < 2 ? 0.0 : p.coords[1];
        frame.marker(i, x, y, 3.0, color_for(spec, p.label));
        if (spec.point_labels) frame.text(frame.sx(x) + 4, frame.sy(y) - 4, p.label, 8);
    }
    return frame.document();
}

} // namespace

std::string render_plot(const PlotSpec& spec, const std::vector<double>& shares) {
    if (spec.kind != PlotKind::kScree)
        throw Error("svg: component shares can only be drawn as a scree plot");
    double top = 0.0;
    for (double v : shares) top = std::max(top, v);
    Frame frame(spec, 0.0, std::max<double>(1.0, static_cast<double>(shares.size())), 0.0,
                top > 0 ? top : 1.0);
    frame.axes();
    add_title(frame);
    const double slot = (spec.width - 2 * kMargin) / std::max<size_t>(1, shares.size());
    for (size_t i = 0; i < shares.size(); ++i) {
        const double x0 = kMargin + slot * static_cast<double>(i) + slot * 0.15;
        const double y0 = frame.sy(shares[i]);
        const double y_base = spec.height - kMargin;
        frame.body += "  <rect id=\"m" + std::to_string(i) + "\" x=\"" + px(x0) + "\" y=\"" +
                      px(y0) + "\" width=\"" + px(slot * 0.7) + "\" height=\"" +
                      px(y_base - y0) + "\" fill=\"#1f6fb5\"/>\n";
    }
    return frame.document();
}

std::string render_plot(const PlotSpec& spec, const PointCloud& cloud) {
    if (spec.kind != PlotKind::kScatter && spec.kind != PlotKind::kSubcloud)
        throw Error("svg: a point cloud can only be drawn as scatter or subcloud");
    return render_points(spec, cloud.points);
}

std::string render_plot(const PlotSpec& spec, const SubCloud& cloud) {
    if (spec.kind != PlotKind::kSubcloud && spec.kind != PlotKind::kScatter)
        throw Error("svg: a sub-cloud can only be drawn as scatter or subcloud");
    return render_points(spec, cloud.points);
}

std::string render_plot(const PlotSpec& spec, const PersistenceDiagram& diagram) {
    if (spec.kind != PlotKind::kDiagram)
        throw Error("svg: a persistence diagram needs the diagram plot kind");
    double max_finite = 0.0;
    for (const auto& p : diagram.points) {
        max_finite = std::max(max_finite, p.birth);
        if (!p.essential()) max_finite = std::max(max_finite, p.death);
    }
    const double cap = max_finite > 0 ? 1.05 * max_finite : 1.0;
    Frame frame(spec, 0.0, cap, 0.0, cap);
    frame.axes();
    add_title(frame);
    frame.line(frame.sx(0.0), frame.sy(0.0), frame.sx(cap), frame.sy(cap), "#888888", "4,3");
    for (size_t i = 0; i < diagram.points.size(); ++i) {
        const auto& p = diagram.points[i];
        if (p.essential())
            frame.marker(i, p.birth, cap, 3.0, "#c23b22", /*square=*/true);
        else
            frame.marker(i, p.birth, p.death, 3.0, "#1f6fb5");
    }
    return frame.document();
}

std::string render_plot(const PlotSpec& spec, const Embedding& embedding) {
    if (spec.kind != PlotKind::kMds2d && spec.kind != PlotKind::kMds3d)
        throw Error("svg: an embedding needs an mds plot kind");
    const bool use_size = spec.kind == PlotKind::kMds3d;
    if (embedding.coordinates.cols() < 2 || (use_size && embedding.coordinates.cols() < 3))
        throw Error("svg: embedding has too few axes for this plot kind");
    const size_t n = embedding.coordinates.rows();

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0, min_z = 0, max_z = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = embedding.coordinates(i, 0);
        const double y = embedding.coordinates(i, 1);
        const double z = use_size ? embedding.coordinates(i, 2) : 0.0;
        if (i == 0) { min_x = max_x = x; min_y = max_y = y; min_z = max_z = z; }
        min_x = std::min(min_x, x); max_x = std::max(max_x, x);
        min_y = std::min(min_y, y); max_y = std::max(max_y, y);
        min_z = std::min(min_z, z); max_z = std::max(max_z, z);
    }
    Frame frame(spec, min_x, max_x, min_y, max_y);
    frame.axes();
    add_title(frame);
    const double z_span = max_z - min_z;
    for (size_t i = 0; i < n; ++i) {
        const double x = embedding.coordinates(i, 0);
        const double y = embedding.coordinates(i, 1);
        double radius = 3.5;
        if (use_size && z_span > 1e-12)
            radius = 2.0 + 5.0 * (embedding.coordinates(i, 2) - min_z) / z_span;
        const std::string& label = embedding.labels[i];
        frame.marker(i, x, y, radius, color_for(spec, label));
        if (spec.point_labels) frame.text(frame.sx(x) + 5, frame.sy(y) - 5, label, 9);
    }
    return frame.document();
}

} // namespace topolect
