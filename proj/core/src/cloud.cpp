// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/cloud.hpp"

#include "topolect/error.hpp"

#include <unordered_map>

namespace topolect {

PointCloud full_cloud(const McaModel& model, size_t d) {
    if (d < 1 || d > model.dimension())
        throw Error("cloud: dimension " + std::to_string(d) + " out of range [1," +
                    std::to_string(model.dimension()) + "]");
    PointCloud cloud;
    cloud.dimension = d;
    cloud.points.reserve(model.columns.size());
    for (size_t c = 0; c < model.columns.size(); ++c) {
        LabeledPoint p;
        p.label = model.columns[c].display();
        p.coords.resize(d);
        for (size_t k = 0; k < d; ++k) p.coords[k] = model.coordinates(c, k);
        cloud.points.push_back(std::move(p));
    }
    return cloud;
}

SubCloud subcloud(const McaModel& model, const CategoricalTable& table,
                  const std::string& language_id, size_t d) {
    if (d < 1 || d > model.dimension())
        throw Error("cloud: dimension " + std::to_string(d) + " out of range [1," +
                    std::to_string(model.dimension()) + "]");
    const size_t s = table.sample_index(language_id);
    if (s == CategoricalTable::npos)
        throw Error("cloud: unknown language " + language_id);
    if (table.has_missing())
        throw Error("cloud: table has missing cells; impute before extracting sub-clouds");

    std::unordered_map<std::string, size_t> column_index;
    for (size_t c = 0; c < model.columns.size(); ++c)
        column_index[model.columns[c].feature_id + "\x1f" +
                     std::to_string(model.columns[c].code)] = c;

    SubCloud out;
    out.language_id = language_id;
    out.dimension = d;
    for (size_t f = 0; f < table.feature_count(); ++f) {
        const int code = table.cell(s, f);
        auto it = column_index.find(table.feature_ids[f] + "\x1f" + std::to_string(code));
        if (it == column_index.end())
            throw Error("cloud: category " + table.feature_ids[f] + ":" +
                        std::to_string(code) + " is absent from the model");
        const size_t c = it->second;
        LabeledPoint p;
        p.label = model.columns[c].display();
        p.coords.resize(d);
        for (size_t k = 0; k < d; ++k) p.coords[k] = model.coordinates(c, k);
        out.points.push_back(std::move(p));
        out.source_categories.push_back(model.columns[c]);
    }
    return out;
}

} // namespace topolect
