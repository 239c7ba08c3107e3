// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/diagram_distance.hpp"
#include "topolect/ingest.hpp"
#include "topolect/mca.hpp"
#include "topolect/table.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace topolect {

/// Everything a full run needs. Loaded from a JSON file; individual fields
/// can be overridden by command-line flags afterwards.
struct PipelineConfig {
    std::string input_path;
    TableFormat input_format = TableFormat::kLong;

    std::vector<std::string> excluded_samples = {"katu1276", "tere1281"};
    bool drop_constant = true;
    double missingness_threshold = 0.20;

    std::vector<std::string> ternary_features;
    TernaryMapping ternary_mapping;

    ImputeMethod impute_method = ImputeMethod::kMode;
    int impute_k = 5;
    std::uint64_t impute_seed = 1;
    SentinelSet sentinels;

    size_t mca_dimensions = 4;

    int max_homology_dim = 1;
    /// <= 0 means "use the largest pairwise distance of each cloud".
    double max_scale = 0.0;
    size_t simplex_budget = 20'000'000;
    bool clearing = false;
    int cycles_per_language = 1;

    DiagramMetric metric;
    /// strip | cap for infinite deaths before distances
    bool cap_essentials = false;
    double essential_cap = 0.0;

    std::int64_t permutation_count = 100;
    std::uint64_t permutation_seed = 1;
    bool exact = false;
    std::int64_t partition_cap = 1'000'000;

    /// language -> group label; alternatively loaded from grouping_csv
    /// (columns Language_ID,Group). Exactly two distinct groups make a test.
    std::map<std::string, std::string> groups;
    std::string grouping_csv;

    size_t mds_dimensions = 2;
    std::string output_dir = "out";
    int threads = 0; // 0 = hardware concurrency
};

PipelineConfig load_config(const std::string& path);
PipelineConfig parse_config_text(const std::string& json_text,
                                 const std::string& base_dir = "");

/// Pipeline stages. Every stage reads its inputs from files (the original
/// input or artifacts of earlier stages in output_dir) and writes its own
/// artifacts there, so any stage can be re-run from saved state. Files are
/// written under a .partial suffix and renamed on stage success; a failed
/// stage leaves its .partial files behind.
void stage_ingest(const PipelineConfig& config);
void stage_mca(const PipelineConfig& config);
void stage_clouds(const PipelineConfig& config);
void stage_diagrams(const PipelineConfig& config);
void stage_distmat(const PipelineConfig& config);
void stage_mds(const PipelineConfig& config);
void stage_permtest(const PipelineConfig& config);
void stage_plot(const PipelineConfig& config);

/// All stages in order, then manifest.csv (file name, byte size, digest).
/// Throws Error prefixed with the failing stage's name.
void run_pipeline(const PipelineConfig& config);

/// The group assignment actually in force (config map or grouping CSV).
std::map<std::string, std::string> resolve_groups(const PipelineConfig& config);

/// 64-bit FNV-1a of a byte string, as fixed-width hex.
std::string content_digest(const std::string& bytes);

} // namespace topolect
