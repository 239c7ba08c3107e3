// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/pipeline.hpp"

#include "topolect/cloud.hpp"
#include "topolect/csv.hpp"
#include "topolect/error.hpp"
#include "topolect/mds.hpp"
#include "topolect/permtest.hpp"
#include "topolect/persistence.hpp"
#include "topolect/svg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace fs = std::filesystem;

namespace topolect {

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

/// Writes artifacts under a .partial suffix; commit() renames them into
/// place, so a failed stage leaves only .partial files behind.
class ArtifactWriter {
public:
    explicit ArtifactWriter(const std::string& dir) : dir_(dir) {
        fs::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& content) {
        const fs::path partial = dir_ / (name + ".partial");
        std::ofstream out(partial, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("pipeline: cannot write " + partial.string());
        out << content;
        out.close();
        if (!out) throw Error("pipeline: failed writing " + partial.string());
        pending_.push_back(name);
    }

    void commit() {
        for (const auto& name : pending_) {
            fs::rename(dir_ / (name + ".partial"), dir_ / name);
        }
        pending_.clear();
    }

private:
    fs::path dir_;
    std::vector<std::string> pending_;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("pipeline: cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path out_path(const PipelineConfig& config, const std::string& name) {
    return fs::path(config.output_dir) / name;
}

CategoricalTable read_stage_table(const PipelineConfig& config) {
    return load_value_table(out_path(config, "table.csv").string(), TableFormat::kWide,
                            config.sentinels);
}

double parse_number(const std::string& s) {
    if (s == "inf") return kInfiniteDeath;
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error("pipeline: malformed number '" + s + "'");
    }
}

struct CoordinateTable {
    std::vector<CategoryKey> columns; // label left empty (not stored on disk)
    Matrix coords;                    // one row per category
};

CoordinateTable read_coordinates(const PipelineConfig& config) {
    const csv::Document doc = csv::parse_file(out_path(config, "coordinates.csv").string());
    if (doc.rows.size() < 2) throw Error("pipeline: coordinates.csv is empty");
    const size_t dims = doc.rows[0].size() - 2;
    CoordinateTable out;
    out.coords = Matrix(doc.rows.size() - 1, dims);
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() != dims + 2) throw Error("pipeline: ragged row in coordinates.csv");
        CategoryKey key;
        key.feature_id = row[0];
        key.code = static_cast<int>(parse_number(row[1]));
        out.columns.push_back(key);
        for (size_t d = 0; d < dims; ++d) out.coords(r - 1, d) = parse_number(row[d + 2]);
    }
    return out;
}

/// Rebuild just enough of a model for sub-cloud extraction from the saved
/// coordinates plus the table's labels.
McaModel coordinate_model(const CoordinateTable& ct, const CategoricalTable& table) {
    McaModel model;
    model.columns = ct.columns;
    for (auto& key : model.columns) {
        const size_t f = table.feature_index(key.feature_id);
        if (f == CategoricalTable::npos)
            throw Error("pipeline: coordinates.csv feature " + key.feature_id +
                        " is absent from table.csv");
        if (key.code < 0 || static_cast<size_t>(key.code) >= table.category_labels[f].size())
            throw Error("pipeline: coordinates.csv category " + key.feature_id + ":" +
                        std::to_string(key.code) + " is absent from table.csv");
        key.label = table.category_labels[f][static_cast<size_t>(key.code)];
    }
    model.coordinates = ct.coords;
    model.eigenvalues.assign(ct.coords.cols(), 0.0);
    return model;
}

struct SavedCloud {
    std::vector<std::string> labels; // feature:category display labels
    std::vector<std::vector<double>> coords;
};

SavedCloud read_subcloud(const PipelineConfig& config, const CategoricalTable& table,
                         const std::string& language) {
    const csv::Document doc =
        csv::parse_file(out_path(config, "subcloud_" + language + ".csv").string());
    if (doc.rows.size() < 2)
        throw Error("pipeline: subcloud for " + language + " is empty");
    const size_t dims = doc.rows[0].size() - 2;
    SavedCloud cloud;
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() != dims + 2)
            throw Error("pipeline: ragged row in subcloud for " + language);
        const size_t f = table.feature_index(row[0]);
        const int code = static_cast<int>(parse_number(row[1]));
        std::string label = row[0] + ":";
        if (f != CategoricalTable::npos && code >= 0 &&
            static_cast<size_t>(code) < table.category_labels[f].size())
            label += table.category_labels[f][static_cast<size_t>(code)];
        else
            label += row[1];
        cloud.labels.push_back(label);
        std::vector<double> point(dims);
        for (size_t d = 0; d < dims; ++d) point[d] = parse_number(row[d + 2]);
        cloud.coords.push_back(std::move(point));
    }
    return cloud;
}

PersistenceDiagram read_diagram(const PipelineConfig& config, const std::string& language,
                                int dim) {
    const csv::Document doc =
        csv::parse_file(out_path(config, "diagram_" + language + ".csv").string());
    PersistenceDiagram dgm;
    dgm.dim = dim;
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() != 3) throw Error("pipeline: ragged row in diagram for " + language);
        if (static_cast<int>(parse_number(row[0])) != dim) continue;
        DiagramPoint p;
        p.birth = parse_number(row[1]);
        p.death = parse_number(row[2]);
        p.birth_index = 0;
        p.death_index = std::isinf(p.death) ? kNoIndex : 0;
        dgm.points.push_back(p);
    }
    return dgm;
}

struct SavedDistmat {
    std::vector<std::string> labels;
    Matrix dm;
};

SavedDistmat read_distmat(const PipelineConfig& config) {
    const csv::Document doc = csv::parse_file(out_path(config, "distmat.csv").string());
    if (doc.rows.size() < 2) throw Error("pipeline: distmat.csv is empty");
    SavedDistmat out;
    const size_t n = doc.rows.size() - 1;
    out.dm = Matrix(n, n);
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() != n + 1) throw Error("pipeline: distmat.csv is not square");
        out.labels.push_back(row[0]);
        for (size_t c = 0; c < n; ++c) out.dm(r - 1, c) = parse_number(row[c + 1]);
    }
    return out;
}

PersistenceDiagram prepare_for_distance(const PipelineConfig& config,
                                        const PersistenceDiagram& dgm) {
    if (config.cap_essentials) return cap_essentials(dgm, config.essential_cap);
    return strip_essentials(dgm);
}

/// Languages the comparison stages operate on: the grouped ones when a
/// grouping is configured, otherwise every language, always in table order.
std::vector<std::string> analysis_languages(const PipelineConfig& config,
                                            const CategoricalTable& table) {
    const auto groups = resolve_groups(config);
    if (groups.empty()) return table.sample_ids;
    for (const auto& [language, group] : groups)
        if (table.sample_index(language) == CategoricalTable::npos)
            throw Error("pipeline: grouped language " + language +
                        " is not present after preprocessing");
    std::vector<std::string> out;
    for (const auto& id : table.sample_ids)
        if (groups.count(id)) out.push_back(id);
    return out;
}

int effective_threads(const PipelineConfig& config) {
    if (config.threads > 0) return config.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string palette_color(size_t i) {
    static const char* kPalette[] = {"#c23b22", "#1f6fb5", "#3a923a", "#8c5aa0",
                                     "#e3850e", "#777777", "#17a2b8", "#a0522d"};
    return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

} // namespace

std::map<std::string, std::string> resolve_groups(const PipelineConfig& config) {
    if (config.grouping_csv.empty()) return config.groups;
    const csv::Document doc = csv::parse_file(config.grouping_csv);
    if (doc.rows.empty()) return {};
    const auto& header = doc.rows[0];
    auto find_col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw Error("pipeline: grouping file lacks column " + name);
        return static_cast<size_t>(it - header.begin());
    };
    const size_t lang_col = find_col("Language_ID");
    const size_t group_col = find_col("Group");
    std::map<std::string, std::string> groups;
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() <= std::max(lang_col, group_col))
            throw Error("pipeline: malformed grouping row at line " +
                        std::to_string(doc.lines[r]));
        groups[row[lang_col]] = row[group_col];
    }
    return groups;
}

void stage_ingest(const PipelineConfig& config) {
    CategoricalTable table =
        load_value_table(config.input_path, config.input_format, config.sentinels);
    PreprocessReport report;

    auto [excluded, report1] =
        apply_exclusions(table, config.excluded_samples, config.drop_constant);
    report.merge(report1);
    auto [filtered, report2] = filter_by_missingness(excluded, config.missingness_threshold);
    report.merge(report2);
    auto [imputed, report3] =
        impute(filtered, config.impute_method, config.impute_k, config.impute_seed);
    report.merge(report3);
    auto [final_table, report4] =
        split_ternary(imputed, config.ternary_features, config.ternary_mapping);
    report.merge(report4);

    ArtifactWriter writer(config.output_dir);
    writer.write("table.csv", to_wide_csv(final_table));
    writer.write("report.txt", report.to_text());
    writer.write("dropped.csv", report.to_csv());
    writer.commit();
}

void stage_mca(const PipelineConfig& config) {
    const CategoricalTable table = read_stage_table(config);
    const McaModel model = mca_fit(table);

    std::string coords;
    {
        csv::Row header{"feature_id", "category_code"};
        for (size_t d = 1; d <= model.dimension(); ++d)
            header.push_back("dim" + std::to_string(d));
        coords += csv::join(header) + "\n";
        for (size_t c = 0; c < model.columns.size(); ++c) {
            csv::Row row{model.columns[c].feature_id, std::to_string(model.columns[c].code)};
            for (size_t d = 0; d < model.dimension(); ++d)
                row.push_back(csv::format_full(model.coordinates(c, d)));
            coords += csv::join(row) + "\n";
        }
    }

    std::string scree = "component,adjusted_inertia,percentage,cumulative_percentage\n";
    {
        const std::vector<double> shares = variance_percentages(model);
        double cumulative = 0.0;
        for (size_t c = 0; c < shares.size(); ++c) {
            cumulative += shares[c] * 100.0;
            scree += csv::join({std::to_string(c + 1),
                                csv::format_full(model.adjusted_inertias[c]),
                                csv::format_full(shares[c] * 100.0),
                                csv::format_full(cumulative)}) +
                     "\n";
        }
    }

    ArtifactWriter writer(config.output_dir);
    writer.write("coordinates.csv", coords);
    writer.write("scree.csv", scree);
    writer.commit();
}

void stage_clouds(const PipelineConfig& config) {
    const CategoricalTable table = read_stage_table(config);
    const CoordinateTable ct = read_coordinates(config);
    const McaModel model = coordinate_model(ct, table);
    const size_t d = config.mca_dimensions;

    ArtifactWriter writer(config.output_dir);
    for (const auto& language : table.sample_ids) {
        const SubCloud cloud = subcloud(model, table, language, d);
        csv::Row header{"feature_id", "category_code"};
        for (size_t k = 1; k <= d; ++k) header.push_back("dim" + std::to_string(k));
        std::string text = csv::join(header) + "\n";
        for (size_t p = 0; p < cloud.points.size(); ++p) {
            csv::Row row{cloud.source_categories[p].feature_id,
                         std::to_string(cloud.source_categories[p].code)};
            for (double x : cloud.points[p].coords) row.push_back(csv::format_full(x));
            text += csv::join(row) + "\n";
        }
        writer.write("subcloud_" + language + ".csv", text);
    }
    writer.commit();
}

void stage_diagrams(const PipelineConfig& config) {
    const CategoricalTable table = read_stage_table(config);
    const std::vector<std::string>& languages = table.sample_ids;
    const size_t n = languages.size();

    std::vector<std::string> diagram_files(n);
    std::vector<std::vector<std::pair<std::string, std::string>>> cycle_files(n);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < n && !failed; i = next.fetch_add(1)) {
            try {
                const std::string& language = languages[i];
                const SavedCloud cloud = read_subcloud(config, table, language);
                const Matrix dm = pairwise_distances(cloud.coords);
                const double scale =
                    config.max_scale > 0 ? config.max_scale : max_distance(dm);
                const Filtration filtration = rips_filtration(
                    dm, config.max_homology_dim + 1, scale, config.simplex_budget);
                const Reduction red = reduce(filtration, {.clearing = config.clearing});

                std::string text = "dim,birth,death\n";
                std::vector<DiagramPoint> loops;
                for (int p = 0; p <= config.max_homology_dim; ++p) {
                    const PersistenceDiagram dgm = diagram(red, p);
                    for (const auto& point : dgm.points) {
                        text += csv::join({std::to_string(p), csv::format_full(point.birth),
                                           csv::format_full(point.death)}) +
                                "\n";
                        if (p == 1 && !point.essential()) loops.push_back(point);
                    }
                }
                diagram_files[i] = std::move(text);

                std::sort(loops.begin(), loops.end(),
                          [](const DiagramPoint& a, const DiagramPoint& b) {
                              if (a.persistence() != b.persistence())
                                  return a.persistence() > b.persistence();
                              return a.birth < b.birth;
                          });
                const size_t top =
                    std::min<size_t>(loops.size(),
                                     static_cast<size_t>(std::max(config.cycles_per_language, 0)));
                for (size_t k = 0; k < top; ++k) {
                    const auto chain = representative_cycle(red, loops[k]);
                    std::string cycle_text = "vertex_label\n";
                    for (int v : chain_vertices(chain))
                        cycle_text += csv::escape(cloud.labels[static_cast<size_t>(v)]) + "\n";
                    cycle_files[i].push_back(
                        {"cycle_" + language + "_" + std::to_string(k + 1) + ".csv",
                         std::move(cycle_text)});
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed = true;
                failure = e.what();
            }
        }
    };

    std::vector<std::thread> workers;
    const int thread_count = std::min<int>(effective_threads(config), static_cast<int>(n));
    for (int t = 0; t < std::max(1, thread_count); ++t) workers.emplace_back(work);
    for (auto& w : workers) w.join();
    if (failed) throw Error(failure);

    ArtifactWriter writer(config.output_dir);
    for (size_t i = 0; i < n; ++i) {
        writer.write("diagram_" + languages[i] + ".csv", diagram_files[i]);
        for (const auto& [name, content] : cycle_files[i]) writer.write(name, content);
    }
    writer.commit();
}

void stage_distmat(const PipelineConfig& config) {
    const CategoricalTable table = read_stage_table(config);
    const std::vector<std::string> languages = analysis_languages(config, table);
    if (languages.size() < 2)
        throw Error("pipeline: need at least two languages to compare");

    std::vector<PersistenceDiagram> diagrams;
    diagrams.reserve(languages.size());
    for (const auto& language : languages)
        diagrams.push_back(prepare_for_distance(
            config, read_diagram(config, language, config.max_homology_dim)));

    const Matrix dm = distance_matrix(diagrams, config.metric);
    csv::Row header{"Language_ID"};
    header.insert(header.end(), languages.begin(), languages.end());
    std::string text = csv::join(header) + "\n";
    for (size_t i = 0; i < languages.size(); ++i) {
        csv::Row row{languages[i]};
        for (size_t j = 0; j < languages.size(); ++j)
            row.push_back(csv::format_full(dm(i, j)));
        text += csv::join(row) + "\n";
    }

    ArtifactWriter writer(config.output_dir);
    writer.write("distmat.csv", text);
    writer.commit();
}

void stage_mds(const PipelineConfig& config) {
    const SavedDistmat saved = read_distmat(config);
    const Embedding embedding =
        classical_mds(saved.dm, config.mds_dimensions, saved.labels);

    csv::Row header{"label"};
    for (size_t k = 1; k <= config.mds_dimensions; ++k)
        header.push_back("dim" + std::to_string(k));
    std::string text = csv::join(header) + "\n";
    for (size_t i = 0; i < saved.labels.size(); ++i) {
        csv::Row row{saved.labels[i]};
        for (size_t k = 0; k < config.mds_dimensions; ++k)
            row.push_back(csv::format_full(embedding.coordinates(i, k)));
        text += csv::join(row) + "\n";
    }

    std::string summary = "component,eigenvalue\n";
    for (size_t k = 0; k < embedding.eigenvalues_used.size(); ++k)
        summary += csv::join({std::to_string(k + 1),
                              csv::format_full(embedding.eigenvalues_used[k])}) +
                   "\n";
    summary += csv::join({"stress", csv::format_full(embedding.stress)}) + "\n";

    ArtifactWriter writer(config.output_dir);
    writer.write("mds.csv", text);
    writer.write("mds_eigenvalues.csv", summary);
    writer.commit();
}

void stage_permtest(const PipelineConfig& config) {
    const auto groups = resolve_groups(config);
    if (groups.empty())
        throw Error("pipeline: the permutation test needs a group assignment");
    const SavedDistmat saved = read_distmat(config);

    std::vector<std::string> labels_sorted;
    for (const auto& [language, group] : groups)
        if (std::find(labels_sorted.begin(), labels_sorted.end(), group) ==
            labels_sorted.end())
            labels_sorted.push_back(group);
    std::sort(labels_sorted.begin(), labels_sorted.end());
    if (labels_sorted.size() != 2)
        throw Error("pipeline: the permutation test needs exactly two groups, found " +
                    std::to_string(labels_sorted.size()));

    std::vector<size_t> g1, g2;
    for (size_t i = 0; i < saved.labels.size(); ++i) {
        auto it = groups.find(saved.labels[i]);
        if (it == groups.end()) continue;
        (it->second == labels_sorted[0] ? g1 : g2).push_back(i);
    }
    if (g1.empty() || g2.empty())
        throw Error("pipeline: a group has no members in the distance matrix");

    // Reorder so group 1 occupies the leading block.
    std::vector<size_t> order = g1;
    order.insert(order.end(), g2.begin(), g2.end());
    Matrix dm(order.size(), order.size());
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < order.size(); ++j) dm(i, j) = saved.dm(order[i], order[j]);

    const TestResult result =
        config.exact
            ? exact_permutation_test_from_matrix(dm, g1.size(), config.metric.describe(),
                                                 config.partition_cap)
            : permutation_test_from_matrix(dm, g1.size(), config.metric.describe(),
                                           config.permutation_count,
                                           config.permutation_seed);

    std::string text = "mode,metric,n1,n2,observed_loss,count,total,p_value,seed\n";
    text += csv::join({result.mode == TestResult::Mode::kExact ? "exact" : "randomized",
                       result.metric, std::to_string(g1.size()), std::to_string(g2.size()),
                       csv::format_full(result.observed_loss),
                       std::to_string(result.count_leq), std::to_string(result.total),
                       csv::format_full(result.p_value),
                       result.mode == TestResult::Mode::kExact
                           ? std::string{}
                           : std::to_string(result.seed)}) +
            "\n";

    ArtifactWriter writer(config.output_dir);
    writer.write("permtest.csv", text);
    writer.commit();
}

void stage_plot(const PipelineConfig& config) {
    const CategoricalTable table = read_stage_table(config);
    ArtifactWriter writer(config.output_dir);

    { // scree
        const csv::Document doc = csv::parse_file(out_path(config, "scree.csv").string());
        std::vector<double> shares;
        for (size_t r = 1; r < doc.rows.size(); ++r) {
            const double pct = parse_number(doc.rows[r][2]);
            if (pct > 0) shares.push_back(pct);
        }
        PlotSpec spec{.kind = PlotKind::kScree, .title = "Adjusted variance (%)"};
        writer.write("scree_variance.svg", render_plot(spec, shares));
    }

    { // full category cloud
        const CoordinateTable ct = read_coordinates(config);
        const McaModel model = coordinate_model(ct, table);
        const PointCloud cloud = full_cloud(model, std::min<size_t>(2, model.dimension()));
        PlotSpec spec{.kind = PlotKind::kScatter, .title = "Category cloud"};
        writer.write("scatter_categories.svg", render_plot(spec, cloud));
    }

    for (const auto& language : table.sample_ids) { // per-language plots
        const SavedCloud cloud = read_subcloud(config, table, language);
        PointCloud pc;
        pc.dimension = cloud.coords.empty() ? 0 : cloud.coords[0].size();
        for (size_t i = 0; i < cloud.coords.size(); ++i)
            pc.points.push_back({cloud.labels[i], cloud.coords[i]});
        PlotSpec cloud_spec{.kind = PlotKind::kSubcloud, .title = language};
        writer.write("subcloud_" + language + ".svg", render_plot(cloud_spec, pc));

        const PersistenceDiagram dgm =
            read_diagram(config, language, config.max_homology_dim);
        PlotSpec dgm_spec{.kind = PlotKind::kDiagram, .title = language};
        writer.write("diagram_" + language + ".svg", render_plot(dgm_spec, dgm));
    }

    if (fs::exists(out_path(config, "mds.csv"))) { // mds, colored by group
        const csv::Document doc = csv::parse_file(out_path(config, "mds.csv").string());
        Embedding embedding;
        const size_t k = doc.rows.empty() ? 0 : doc.rows[0].size() - 1;
        embedding.coordinates = Matrix(doc.rows.size() - 1, k);
        for (size_t r = 1; r < doc.rows.size(); ++r) {
            embedding.labels.push_back(doc.rows[r][0]);
            for (size_t c = 0; c < k; ++c)
                embedding.coordinates(r - 1, c) = parse_number(doc.rows[r][c + 1]);
        }
        const auto groups = resolve_groups(config);
        std::vector<std::string> group_names;
        for (const auto& [language, group] : groups)
            if (std::find(group_names.begin(), group_names.end(), group) ==
                group_names.end())
                group_names.push_back(group);
        std::sort(group_names.begin(), group_names.end());
        PlotSpec spec{.kind = k >= 3 ? PlotKind::kMds3d : PlotKind::kMds2d,
                      .title = "MDS of diagram distances",
                      .point_labels = true};
        for (const auto& [language, group] : groups) {
            const size_t g = static_cast<size_t>(
                std::find(group_names.begin(), group_names.end(), group) -
                group_names.begin());
            spec.group_colors[language] = palette_color(g);
        }
        writer.write(std::string(k >= 3 ? "mds3d" : "mds2d") + "_languages.svg",
                     render_plot(spec, embedding));
    }
    writer.commit();
}

void run_pipeline(const PipelineConfig& config) {
    const std::vector<std::pair<std::string, void (*)(const PipelineConfig&)>> stages = {
        {"ingest", stage_ingest},     {"mca", stage_mca},
        {"clouds", stage_clouds},     {"diagrams", stage_diagrams},
        {"distmat", stage_distmat},   {"mds", stage_mds},
        {"permtest", stage_permtest}, {"plot", stage_plot},
    };
    const bool has_groups = !resolve_groups(config).empty();
    for (const auto& [name, stage] : stages) {
        if (name == "permtest" && !has_groups) continue;
        try {
            stage(config);
        } catch (const std::exception& e) {
            throw Error("stage " + name + ": " + e.what());
        }
    }

    // Manifest over every final artifact, sorted by name.
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(config.output_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name == "manifest.csv" || name.ends_with(".partial")) continue;
        names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    std::string text = "file,bytes,digest\n";
    for (const auto& name : names) {
        const std::string bytes = read_file(fs::path(config.output_dir) / name);
        text += csv::join({name, std::to_string(bytes.size()), content_digest(bytes)}) + "\n";
    }
    ArtifactWriter writer(config.output_dir);
    writer.write("manifest.csv", text);
    writer.commit();
}

} // namespace topolect
