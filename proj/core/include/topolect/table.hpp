// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace topolect {

/// Sentinel cell value for an unobserved entry.
inline constexpr int kMissing = -1;

/// A samples-by-features grid of categorical codes.
///
/// Codes are small non-negative integers assigned per feature in first-seen
/// order; the display string behind each code is kept in `category_labels`.
/// A cell holds either a valid code for its feature or kMissing.
class CategoricalTable {
public:
    std::vector<std::string> sample_ids;
    std::vector<std::string> feature_ids;
    /// Row-major grid, sample_count() x feature_count().
    std::vector<int> cells;
    /// category_labels[f][code] is the display string of `code` in feature f.
    std::vector<std::vector<std::string>> category_labels;

    size_t sample_count() const { return sample_ids.size(); }
    size_t feature_count() const { return feature_ids.size(); }

    int cell(size_t sample, size_t feature) const {
        return cells[sample * feature_count() + feature];
    }
    int& cell(size_t sample, size_t feature) {
        return cells[sample * feature_count() + feature];
    }

    bool has_missing() const;
    size_t missing_count() const;

    /// Index of a sample id, or npos.
    size_t sample_index(const std::string& id) const;
    size_t feature_index(const std::string& id) const;
    static constexpr size_t npos = static_cast<size_t>(-1);

    /// Register (or look up) a label in a feature's category list and return
    /// its code. New labels get the next free code.
    int intern_label(size_t feature, const std::string& label);

    /// Structural consistency check; throws Error on violation.
    void validate() const;

    bool operator==(const CategoricalTable&) const = default;
};

/// What a preprocessing step removed, imputed or rewrote.
struct PreprocessReport {
    std::vector<std::string> dropped_constant_features;
    std::vector<std::string> dropped_excluded_samples;
    /// Exclusion ids that were requested but not present (warnings, not errors).
    std::vector<std::string> unknown_excluded_samples;
    std::vector<std::string> dropped_features_by_missingness;
    std::vector<std::string> dropped_samples_by_missingness;
    std::int64_t imputed_cell_count = 0;
    /// original feature id -> the pair of derived binary feature ids
    std::map<std::string, std::pair<std::string, std::string>> ternary_splits;

    /// Merge another report into this one (pipeline runs accumulate one).
    void merge(const PreprocessReport& other);

    /// One decision per line, human readable.
    std::string to_text() const;
    /// Machine readable list of dropped/derived items: kind,item,detail.
    std::string to_csv() const;
};

} // namespace topolect
