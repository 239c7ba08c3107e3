// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <string>

namespace topolect::testing {

/// Deterministic synthetic dataset with two contrasting groups of languages:
/// the "loopy" group holds the rare value on a ring of mutually reinforcing
/// features, so its sub-point clouds carry a circular structure; the "plain"
/// group holds the common values and stays near the origin. Background
/// samples with sliding windows of the rare values give the ring its
/// cyclic co-occurrence pattern.
struct SyntheticDataset {
    std::string values_csv; // long format
    std::string groups_csv; // Language_ID,Group
    std::string config_json;
};

SyntheticDataset make_synthetic_dataset(const std::string& output_dir = "out");

/// Write the three files (values.csv, groups.csv, config.json) into dir.
void write_synthetic_dataset(const std::string& dir, const std::string& output_dir = "out");

} // namespace topolect::testing
