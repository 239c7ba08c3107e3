// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/table.hpp"

#include "topolect/csv.hpp"
#include "topolect/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace topolect {

bool CategoricalTable::has_missing() const {
    return std::find(cells.begin(), cells.end(), kMissing) != cells.end();
}

size_t CategoricalTable::missing_count() const {
    return static_cast<size_t>(std::count(cells.begin(), cells.end(), kMissing));
}

size_t CategoricalTable::sample_index(const std::string& id) const {
    auto it = std::find(sample_ids.begin(), sample_ids.end(), id);
    return it == sample_ids.end() ? npos : static_cast<size_t>(it - sample_ids.begin());
}

size_t CategoricalTable::feature_index(const std::string& id) const {
    auto it = std::find(feature_ids.begin(), feature_ids.end(), id);
    return it == feature_ids.end() ? npos : static_cast<size_t>(it - feature_ids.begin());
}

int CategoricalTable::intern_label(size_t feature, const std::string& label) {
    auto& labels = category_labels[feature];
    for (size_t code = 0; code < labels.size(); ++code)
        if (labels[code] == label) return static_cast<int>(code);
    labels.push_back(label);
    return static_cast<int>(labels.size() - 1);
}

void CategoricalTable::validate() const {
    if (cells.size() != sample_count() * feature_count())
        throw Error("table: cell grid does not match sample x feature dimensions");
    if (category_labels.size() != feature_count())
        throw Error("table: category label list does not match feature count");
    std::unordered_set<std::string> seen;
    for (const auto& id : sample_ids)
        if (!seen.insert(id).second) throw Error("table: duplicate sample id " + id);
    seen.clear();
    for (const auto& id : feature_ids)
        if (!seen.insert(id).second) throw Error("table: duplicate feature id " + id);
    for (size_t s = 0; s < sample_count(); ++s)
        for (size_t f = 0; f < feature_count(); ++f) {
            int c = cell(s, f);
            if (c == kMissing) continue;
            if (c < 0 || static_cast<size_t>(c) >= category_labels[f].size())
                throw Error("table: cell (" + sample_ids[s] + "," + feature_ids[f] +
                            ") holds code " + std::to_string(c) + " with no label");
        }
}

void PreprocessReport::merge(const PreprocessReport& other) {
    auto append = [](std::vector<std::string>& dst, const std::vector<std::string>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    append(dropped_constant_features, other.dropped_constant_features);
    append(dropped_excluded_samples, other.dropped_excluded_samples);
    append(unknown_excluded_samples, other.unknown_excluded_samples);
    append(dropped_features_by_missingness, other.dropped_features_by_missingness);
    append(dropped_samples_by_missingness, other.dropped_samples_by_missingness);
    imputed_cell_count += other.imputed_cell_count;
    for (const auto& [k, v] : other.ternary_splits) ternary_splits[k] = v;
}

std::string PreprocessReport::to_text() const {
    std::string out;
    for (const auto& id : dropped_excluded_samples)
        out += "excluded sample " + id + "\n";
    for (const auto& id : unknown_excluded_samples)
        out += "warning: excluded sample " + id + " not present\n";
    for (const auto& id : dropped_constant_features)
        out += "dropped constant feature " + id + "\n";
    for (const auto& id : dropped_features_by_missingness)
        out += "dropped feature " + id + " (missingness above threshold)\n";
    for (const auto& id : dropped_samples_by_missingness)
        out += "dropped sample " + id + " (missingness above threshold)\n";
    for (const auto& [orig, derived] : ternary_splits)
        out += "split ternary feature " + orig + " into " + derived.first + " and " +
               derived.second + "\n";
    out += "imputed cells: " + std::to_string(imputed_cell_count) + "\n";
    return out;
}

std::string PreprocessReport::to_csv() const {
    std::string out = "kind,item,detail\n";
    auto emit = [&](const std::string& kind, const std::string& item, const std::string& detail) {
        out += csv::join({kind, item, detail}) + "\n";
    };
    for (const auto& id : dropped_excluded_samples) emit("excluded_sample", id, "");
    for (const auto& id : unknown_excluded_samples) emit("unknown_exclusion", id, "");
    for (const auto& id : dropped_constant_features) emit("constant_feature", id, "");
    for (const auto& id : dropped_features_by_missingness) emit("missingness_feature", id, "");
    for (const auto& id : dropped_samples_by_missingness) emit("missingness_sample", id, "");
    for (const auto& [orig, derived] : ternary_splits)
        emit("ternary_split", orig, derived.first + ";" + derived.second);
    emit("imputed_cells", std::to_string(imputed_cell_count), "");
    return out;
}

} // namespace topolect
