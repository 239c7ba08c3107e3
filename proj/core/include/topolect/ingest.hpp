// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topolect {

enum class TableFormat { kLong, kWide };

/// Input strings treated as "no value". Configurable; defaults below.
struct SentinelSet {
    std::vector<std::string> values = {"", "?", "NA"};
    bool contains(const std::string& s) const;
};

/// Load a categorical table from disk.
///
/// Long format: header Language_ID,Parameter_ID,Value, one observation per
/// row; (sample, feature) pairs absent from the file stay missing. Wide
/// format: sample ids in the first column, feature ids in the header row.
/// Category codes are assigned per feature in first-seen order.
CategoricalTable load_value_table(const std::string& path, TableFormat format,
                                  const SentinelSet& sentinels = {});

/// Same, from an in-memory document (used by tests and the wide-table stage
/// files written by the CLI).
CategoricalTable load_value_table_text(const std::string& text, TableFormat format,
                                       const SentinelSet& sentinels = {});

/// Serialize a table in wide format with display labels; round-trips through
/// load_value_table(kWide).
std::string to_wide_csv(const CategoricalTable& table);

/// Remove the listed samples and, optionally, features whose non-missing
/// values are all identical. Unknown sample ids are recorded as warnings.
std::pair<CategoricalTable, PreprocessReport>
apply_exclusions(const CategoricalTable& table, const std::vector<std::string>& excluded_samples,
                 bool drop_constant);

/// Drop features, then samples, whose missing fraction exceeds max_fraction,
/// repeating both passes until nothing more is dropped. Throws if the result
/// has no samples or no features.
std::pair<CategoricalTable, PreprocessReport>
filter_by_missingness(const CategoricalTable& table, double max_fraction);

/// How the categories of a ternary feature map onto the derived
/// (F_XY, F_YX) pair of binary cells.
struct TernaryMapping {
    /// Code of the "both orders" category, used when both_label is unset.
    int both_code = 2;
    /// When set, the "both" category is found per feature by display label.
    std::optional<std::string> both_label;
    /// Full override: display label -> (xy, yx) cell pair.
    std::optional<std::map<std::string, std::pair<int, int>>> label_map;
};

/// Replace each listed feature F by two binary features F_XY and F_YX.
/// Default mapping: lowest non-"both" code -> (1,0), next -> (0,1),
/// both -> (1,1); missing stays missing in both columns.
std::pair<CategoricalTable, PreprocessReport>
split_ternary(const CategoricalTable& table, const std::vector<std::string>& ternary_features,
              const TernaryMapping& mapping = {});

enum class ImputeMethod { kMode, kKnn };

/// Fill every missing cell. kMode takes the per-feature majority code with
/// ties broken by a seeded draw. kKnn ranks donor samples by Gower distance
/// over co-observed features and takes the majority among the k nearest,
/// falling back to the mode when no donor exists.
std::pair<CategoricalTable, PreprocessReport>
impute(const CategoricalTable& table, ImputeMethod method, int k, std::uint64_t seed);

} // namespace topolect
