// Apache License, Version 2.0, refer to LICENSE.txt
//
// topolect: categorical tables -> MCA point clouds -> persistence diagrams
// -> diagram distances, MDS and permutation tests, stage by stage or in one
// run. Every stage reads the previous stage's CSV artifacts, so any stage
// can be re-run on saved state.

#include "topolect/error.hpp"
#include "topolect/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <optional>
#include <string>

namespace {

struct Overrides {
    std::optional<size_t> dims;
    std::optional<std::string> metric;
    std::optional<double> q;
    std::optional<bool> exact;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
};

void apply(const Overrides& o, topolect::PipelineConfig& config) {
    if (o.dims) config.mca_dimensions = *o.dims;
    if (o.metric) {
        if (*o.metric == "wasserstein")
            config.metric.kind = topolect::DiagramMetric::Kind::kWasserstein;
        else if (*o.metric == "bottleneck")
            config.metric.kind = topolect::DiagramMetric::Kind::kBottleneck;
        else
            throw topolect::Error("unknown metric '" + *o.metric + "'");
    }
    if (o.q) config.metric.q = *o.q;
    if (o.exact) config.exact = *o.exact;
    if (o.seed) {
        config.permutation_seed = *o.seed;
        config.impute_seed = *o.seed;
    }
    if (o.out) config.output_dir = *o.out;
    if (o.threads) config.threads = *o.threads;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological comparison of categorical typological tables"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "Pipeline configuration (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--dims", overrides.dims, "MCA dimensions for the sub-clouds");
        cmd->add_option("--metric", overrides.metric,
                        "Diagram metric: wasserstein or bottleneck");
        cmd->add_option("--q", overrides.q, "Wasserstein order");
        cmd->add_flag("--exact", [&](std::int64_t) { overrides.exact = true; },
                      "Exact permutation test over all partitions");
        cmd->add_option("--seed", overrides.seed, "Seed for imputation and shuffles");
        cmd->add_option("--out", overrides.out, "Output directory");
        cmd->add_option("--threads", overrides.threads, "Worker threads for diagrams");
        return cmd;
    };

    using Stage = std::function<void(const topolect::PipelineConfig&)>;
    const std::vector<std::pair<std::string, Stage>> stages = {
        {"ingest", topolect::stage_ingest},
        {"mca", topolect::stage_mca},
        {"clouds", topolect::stage_clouds},
        {"diagrams", topolect::stage_diagrams},
        {"distmat", topolect::stage_distmat},
        {"mds", topolect::stage_mds},
        {"permtest", topolect::stage_permtest},
        {"plot", topolect::stage_plot},
        {"run", topolect::run_pipeline},
    };
    const std::vector<std::pair<std::string, std::string>> descriptions = {
        {"ingest", "Load, clean, impute and binarize the input table"},
        {"mca", "Adjusted correspondence analysis of the cleaned table"},
        {"clouds", "Write each language's sub-point cloud"},
        {"diagrams", "Persistence diagrams and representative cycles"},
        {"distmat", "Pairwise diagram distances"},
        {"mds", "Classical MDS embedding of the distance matrix"},
        {"permtest", "Group-difference permutation test"},
        {"plot", "SVG figures for every stage"},
        {"run", "Full pipeline plus output manifest"},
    };

    std::map<std::string, CLI::App*> commands;
    for (const auto& [name, description] : descriptions)
        commands[name] = add_common(app.add_subcommand(name, description));

    CLI11_PARSE(app, argc, argv);

    try {
        topolect::PipelineConfig config = topolect::load_config(config_path);
        apply(overrides, config);
        for (const auto& [name, stage] : stages) {
            if (commands.at(name)->parsed()) {
                stage(config);
                break;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
