// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/error.hpp"
#include "topolect/pipeline.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace topolect {

namespace {

using nlohmann::json;

std::string resolve_path(const std::string& path, const std::string& base_dir) {
    if (path.empty() || base_dir.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(base_dir) / p).string();
}

DiagramMetric parse_metric(const json& j) {
    DiagramMetric metric;
    const std::string kind = j.value("kind", "wasserstein");
    if (kind == "wasserstein") metric.kind = DiagramMetric::Kind::kWasserstein;
    else if (kind == "bottleneck") metric.kind = DiagramMetric::Kind::kBottleneck;
    else throw Error("config: unknown metric kind '" + kind + "'");
    metric.q = j.value("q", 2.0);
    const std::string ground = j.value("ground", "lq");
    if (ground == "lq") metric.ground = GroundMetric::kLq;
    else if (ground == "linf") metric.ground = GroundMetric::kLinf;
    else throw Error("config: unknown ground metric '" + ground + "'");
    return metric;
}

} // namespace

PipelineConfig parse_config_text(const std::string& json_text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("config: ") + e.what());
    }

    PipelineConfig config;
    if (j.contains("input")) {
        const auto& in = j.at("input");
        config.input_path = resolve_path(in.value("path", ""), base_dir);
        const std::string format = in.value("format", "long");
        if (format == "long") config.input_format = TableFormat::kLong;
        else if (format == "wide") config.input_format = TableFormat::kWide;
        else throw Error("config: unknown input format '" + format + "'");
        if (in.contains("sentinels"))
            config.sentinels.values = in.at("sentinels").get<std::vector<std::string>>();
    }
    if (j.contains("exclusions"))
        config.excluded_samples = j.at("exclusions").get<std::vector<std::string>>();
    config.drop_constant = j.value("drop_constant", config.drop_constant);
    config.missingness_threshold =
        j.value("missingness_threshold", config.missingness_threshold);

    if (j.contains("ternary")) {
        const auto& t = j.at("ternary");
        if (t.contains("features"))
            config.ternary_features = t.at("features").get<std::vector<std::string>>();
        if (t.contains("both_label"))
            config.ternary_mapping.both_label = t.at("both_label").get<std::string>();
        if (t.contains("both_code"))
            config.ternary_mapping.both_code = t.at("both_code").get<int>();
        if (t.contains("label_map")) {
            std::map<std::string, std::pair<int, int>> map;
            for (const auto& [label, pair] : t.at("label_map").items())
                map[label] = {pair.at(0).get<int>(), pair.at(1).get<int>()};
            config.ternary_mapping.label_map = std::move(map);
        }
    }

    if (j.contains("impute")) {
        const auto& im = j.at("impute");
        const std::string method = im.value("method", "mode");
        if (method == "mode") config.impute_method = ImputeMethod::kMode;
        else if (method == "knn") config.impute_method = ImputeMethod::kKnn;
        else throw Error("config: unknown imputation method '" + method + "'");
        config.impute_k = im.value("k", config.impute_k);
        config.impute_seed = im.value("seed", config.impute_seed);
    }

    if (j.contains("mca"))
        config.mca_dimensions = j.at("mca").value("dimensions", config.mca_dimensions);

    if (j.contains("persistence")) {
        const auto& p = j.at("persistence");
        config.max_homology_dim = p.value("max_dim", config.max_homology_dim);
        if (p.contains("max_scale") && p.at("max_scale").is_number())
            config.max_scale = p.at("max_scale").get<double>();
        config.simplex_budget = p.value("simplex_budget", config.simplex_budget);
        config.clearing = p.value("clearing", config.clearing);
        config.cycles_per_language =
            p.value("cycles_per_language", config.cycles_per_language);
    }

    if (j.contains("metric")) config.metric = parse_metric(j.at("metric"));
    if (j.contains("essentials")) {
        const auto& e = j.at("essentials");
        const std::string handling = e.value("handling", "strip");
        if (handling == "cap") {
            config.cap_essentials = true;
            config.essential_cap = e.value("cap", 0.0);
        } else if (handling != "strip") {
            throw Error("config: unknown essentials handling '" + handling + "'");
        }
    }

    if (j.contains("permutation")) {
        const auto& p = j.at("permutation");
        config.permutation_count = p.value("count", config.permutation_count);
        config.permutation_seed = p.value("seed", config.permutation_seed);
        config.exact = p.value("exact", config.exact);
        config.partition_cap = p.value("partition_cap", config.partition_cap);
    }

    if (j.contains("groups")) {
        const auto& g = j.at("groups");
        if (g.contains("file"))
            config.grouping_csv = resolve_path(g.at("file").get<std::string>(), base_dir);
        if (g.contains("map"))
            for (const auto& [language, group] : g.at("map").items())
                config.groups[language] = group.get<std::string>();
    }

    if (j.contains("mds"))
        config.mds_dimensions = j.at("mds").value("dimensions", config.mds_dimensions);
    config.output_dir = j.value("output_dir", config.output_dir);
    config.threads = j.value("threads", config.threads);
    return config;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("config: cannot open " + path);
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    return parse_config_text(text, std::filesystem::path(path).parent_path().string());
}

} // namespace topolect
