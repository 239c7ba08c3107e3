// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/ingest.hpp"

#include "topolect/csv.hpp"
#include "topolect/error.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace topolect {

bool SentinelSet::contains(const std::string& s) const {
    return std::find(values.begin(), values.end(), s) != values.end();
}

namespace {

size_t intern_id(std::vector<std::string>& ids,
                 std::unordered_map<std::string, size_t>& index, const std::string& id) {
    auto [it, inserted] = index.try_emplace(id, ids.size());
    if (inserted) ids.push_back(id);
    return it->second;
}

CategoricalTable load_long(const csv::Document& doc, const SentinelSet& sentinels) {
    if (doc.rows.empty()) throw Error("load: long table has no header row");
    const auto& header = doc.rows.front();
    auto column_of = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw Error("load: long table header lacks required column " + name);
        return static_cast<size_t>(it - header.begin());
    };
    const size_t lang_col = column_of("Language_ID");
    const size_t param_col = column_of("Parameter_ID");
    const size_t value_col = column_of("Value");
    const size_t min_cols = std::max({lang_col, param_col, value_col}) + 1;

    CategoricalTable table;
    std::unordered_map<std::string, size_t> sample_index, feature_index;
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() < min_cols)
            throw Error("load: malformed row at line " + std::to_string(doc.lines[r]) +
                        " (expected at least " + std::to_string(min_cols) + " fields, got " +
                        std::to_string(row.size()) + ")");
        intern_id(table.sample_ids, sample_index, row[lang_col]);
        intern_id(table.feature_ids, feature_index, row[param_col]);
    }
    table.category_labels.resize(table.feature_count());
    table.cells.assign(table.sample_count() * table.feature_count(), kMissing);

    // Track which cells already hold a real value, to flag conflicts.
    std::vector<bool> observed(table.cells.size(), false);
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        const size_t s = sample_index.at(row[lang_col]);
        const size_t f = feature_index.at(row[param_col]);
        const std::string& value = row[value_col];
        if (sentinels.contains(value)) continue;
        const int code = table.intern_label(f, value);
        const size_t pos = s * table.feature_count() + f;
        if (observed[pos] && table.cells[pos] != code)
            throw Error("load: conflicting values for (" + row[lang_col] + "," + row[param_col] +
                        ") at line " + std::to_string(doc.lines[r]));
        table.cells[pos] = code;
        observed[pos] = true;
    }
    table.validate();
    return table;
}

CategoricalTable load_wide(const csv::Document& doc, const SentinelSet& sentinels) {
    if (doc.rows.empty()) throw Error("load: wide table has no header row");
    const auto& header = doc.rows.front();
    if (header.size() < 2) throw Error("load: wide table header has no feature columns");

    CategoricalTable table;
    table.feature_ids.assign(header.begin() + 1, header.end());
    table.category_labels.resize(table.feature_count());
    for (size_t r = 1; r < doc.rows.size(); ++r) {
        const auto& row = doc.rows[r];
        if (row.size() != header.size())
            throw Error("load: malformed row at line " + std::to_string(doc.lines[r]) +
                        " (expected " + std::to_string(header.size()) + " fields, got " +
                        std::to_string(row.size()) + ")");
        table.sample_ids.push_back(row[0]);
        for (size_t f = 0; f < table.feature_count(); ++f) {
            const std::string& value = row[f + 1];
            table.cells.push_back(sentinels.contains(value)
                                      ? kMissing
                                      : table.intern_label(f, value));
        }
    }
    table.validate();
    return table;
}

CategoricalTable select(const CategoricalTable& table, const std::vector<size_t>& samples,
                        const std::vector<size_t>& features) {
    CategoricalTable out;
    for (size_t s : samples) out.sample_ids.push_back(table.sample_ids[s]);
    for (size_t f : features) {
        out.feature_ids.push_back(table.feature_ids[f]);
        out.category_labels.push_back(table.category_labels[f]);
    }
    out.cells.reserve(samples.size() * features.size());
    for (size_t s : samples)
        for (size_t f : features) out.cells.push_back(table.cell(s, f));
    return out;
}

double feature_missing_fraction(const CategoricalTable& table, size_t f) {
    if (table.sample_count() == 0) return 0.0;
    size_t missing = 0;
    for (size_t s = 0; s < table.sample_count(); ++s)
        if (table.cell(s, f) == kMissing) ++missing;
    return static_cast<double>(missing) / static_cast<double>(table.sample_count());
}

double sample_missing_fraction(const CategoricalTable& table, size_t s) {
    if (table.feature_count() == 0) return 0.0;
    size_t missing = 0;
    for (size_t f = 0; f < table.feature_count(); ++f)
        if (table.cell(s, f) == kMissing) ++missing;
    return static_cast<double>(missing) / static_cast<double>(table.feature_count());
}

std::vector<size_t> iota(size_t n) {
    std::vector<size_t> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

CategoricalTable load_value_table(const std::string& path, TableFormat format,
                                  const SentinelSet& sentinels) {
    const csv::Document doc = csv::parse_file(path);
    return format == TableFormat::kLong ? load_long(doc, sentinels) : load_wide(doc, sentinels);
}

CategoricalTable load_value_table_text(const std::string& text, TableFormat format,
                                       const SentinelSet& sentinels) {
    const csv::Document doc = csv::parse_string(text);
    return format == TableFormat::kLong ? load_long(doc, sentinels) : load_wide(doc, sentinels);
}

std::string to_wide_csv(const CategoricalTable& table) {
    std::string out;
    csv::Row header{"Language_ID"};
    header.insert(header.end(), table.feature_ids.begin(), table.feature_ids.end());
    out += csv::join(header) + "\n";
    for (size_t s = 0; s < table.sample_count(); ++s) {
        csv::Row row{table.sample_ids[s]};
        for (size_t f = 0; f < table.feature_count(); ++f) {
            const int code = table.cell(s, f);
            row.push_back(code == kMissing ? "?" : table.category_labels[f][code]);
        }
        out += csv::join(row) + "\n";
    }
    return out;
}

std::pair<CategoricalTable, PreprocessReport>
apply_exclusions(const CategoricalTable& table, const std::vector<std::string>& excluded_samples,
                 bool drop_constant) {
    PreprocessReport report;
    std::vector<size_t> keep_samples;
    for (size_t s = 0; s < table.sample_count(); ++s) {
        const auto& id = table.sample_ids[s];
        if (std::find(excluded_samples.begin(), excluded_samples.end(), id) !=
            excluded_samples.end())
            report.dropped_excluded_samples.push_back(id);
        else
            keep_samples.push_back(s);
    }
    for (const auto& id : excluded_samples)
        if (table.sample_index(id) == CategoricalTable::npos)
            report.unknown_excluded_samples.push_back(id);

    CategoricalTable out = select(table, keep_samples, iota(table.feature_count()));
    if (drop_constant) {
        std::vector<size_t> keep_features;
        for (size_t f = 0; f < out.feature_count(); ++f) {
            int first = kMissing;
            bool constant = true;
            for (size_t s = 0; s < out.sample_count(); ++s) {
                const int c = out.cell(s, f);
                if (c == kMissing) continue;
                if (first == kMissing) first = c;
                else if (c != first) { constant = false; break; }
            }
            // A feature with a single observed category carries no contrast.
            if (constant && first != kMissing)
                report.dropped_constant_features.push_back(out.feature_ids[f]);
            else
                keep_features.push_back(f);
        }
        out = select(out, iota(out.sample_count()), keep_features);
    }
    return {std::move(out), std::move(report)};
}

std::pair<CategoricalTable, PreprocessReport>
filter_by_missingness(const CategoricalTable& table, double max_fraction) {
    if (max_fraction < 0.0 || max_fraction > 1.0)
        throw Error("filter: max_fraction must lie in [0,1]");
    PreprocessReport report;
    CategoricalTable out = table;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<size_t> keep_features;
        for (size_t f = 0; f < out.feature_count(); ++f) {
            if (feature_missing_fraction(out, f) > max_fraction) {
                report.dropped_features_by_missingness.push_back(out.feature_ids[f]);
                changed = true;
            } else {
                keep_features.push_back(f);
            }
        }
        if (changed) out = select(out, iota(out.sample_count()), keep_features);

        std::vector<size_t> keep_samples;
        bool sample_changed = false;
        for (size_t s = 0; s < out.sample_count(); ++s) {
            if (sample_missing_fraction(out, s) > max_fraction) {
                report.dropped_samples_by_missingness.push_back(out.sample_ids[s]);
                sample_changed = true;
            } else {
                keep_samples.push_back(s);
            }
        }
        if (sample_changed) out = select(out, keep_samples, iota(out.feature_count()));
        changed = changed || sample_changed;
    }
    if (out.sample_count() == 0 || out.feature_count() == 0)
        throw Error("filter: no samples or features survive the missingness threshold");
    return {std::move(out), std::move(report)};
}

std::pair<CategoricalTable, PreprocessReport>
split_ternary(const CategoricalTable& table, const std::vector<std::string>& ternary_features,
              const TernaryMapping& mapping) {
    PreprocessReport report;
    CategoricalTable out;
    out.sample_ids = table.sample_ids;

    const std::vector<std::string> binary_labels{"0", "1"};
    for (size_t f = 0; f < table.feature_count(); ++f) {
        const auto& id = table.feature_ids[f];
        const bool listed = std::find(ternary_features.begin(), ternary_features.end(), id) !=
                            ternary_features.end();
        if (!listed) {
            out.feature_ids.push_back(id);
            out.category_labels.push_back(table.category_labels[f]);
            continue;
        }
        const size_t n_codes = table.category_labels[f].size();
        if (n_codes > 3)
            throw Error("split: feature " + id + " has " + std::to_string(n_codes) +
                        " categories, cannot split as ternary");
        out.feature_ids.push_back(id + "_XY");
        out.category_labels.push_back(binary_labels);
        out.feature_ids.push_back(id + "_YX");
        out.category_labels.push_back(binary_labels);
        report.ternary_splits[id] = {id + "_XY", id + "_YX"};
    }

    // Per-feature code -> (xy, yx) mapping resolved up front.
    std::vector<std::vector<std::pair<int, int>>> code_maps(table.feature_count());
    for (size_t f = 0; f < table.feature_count(); ++f) {
        if (!report.ternary_splits.count(table.feature_ids[f])) continue;
        const auto& labels = table.category_labels[f];
        auto& cm = code_maps[f];
        cm.resize(labels.size());
        if (mapping.label_map) {
            for (size_t c = 0; c < labels.size(); ++c) {
                auto it = mapping.label_map->find(labels[c]);
                if (it == mapping.label_map->end())
                    throw Error("split: feature " + table.feature_ids[f] + " category '" +
                                labels[c] + "' has no entry in the ternary mapping");
                cm[c] = it->second;
            }
            continue;
        }
        int both = mapping.both_code;
        if (mapping.both_label) {
            both = -2;
            for (size_t c = 0; c < labels.size(); ++c)
                if (labels[c] == *mapping.both_label) both = static_cast<int>(c);
        }
        size_t plain = 0;
        for (size_t c = 0; c < labels.size(); ++c)
            if (static_cast<int>(c) != both) ++plain;
        if (plain > 2)
            throw Error("split: feature " + table.feature_ids[f] +
                        " has three categories but none matches the \"both\" code");
        int rank = 0;
        for (size_t c = 0; c < labels.size(); ++c) {
            if (static_cast<int>(c) == both) {
                cm[c] = {1, 1};
            } else {
                cm[c] = rank == 0 ? std::make_pair(1, 0) : std::make_pair(0, 1);
                ++rank;
            }
        }
    }

    out.cells.reserve(table.sample_count() * out.feature_count());
    for (size_t s = 0; s < table.sample_count(); ++s) {
        for (size_t f = 0; f < table.feature_count(); ++f) {
            const int c = table.cell(s, f);
            if (code_maps[f].empty()) {
                out.cells.push_back(c);
            } else if (c == kMissing) {
                out.cells.push_back(kMissing);
                out.cells.push_back(kMissing);
            } else {
                out.cells.push_back(code_maps[f][c].first);
                out.cells.push_back(code_maps[f][c].second);
            }
        }
    }
    out.validate();
    return {std::move(out), std::move(report)};
}

namespace {

int majority_code(const std::vector<size_t>& counts, std::mt19937_64& rng) {
    size_t best = 0;
    for (size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = c;
    std::vector<int> tied;
    for (size_t c = 0; c < counts.size(); ++c)
        if (counts[c] == counts[best]) tied.push_back(static_cast<int>(c));
    if (tied.size() == 1) return tied[0];
    std::uniform_int_distribution<size_t> pick(0, tied.size() - 1);
    return tied[pick(rng)];
}

/// Simple-matching dissimilarity over features observed in both samples;
/// empty when nothing is co-observed.
std::optional<double> gower_distance(const CategoricalTable& t, size_t a, size_t b) {
    size_t shared = 0, differing = 0;
    for (size_t f = 0; f < t.feature_count(); ++f) {
        const int ca = t.cell(a, f), cb = t.cell(b, f);
        if (ca == kMissing || cb == kMissing) continue;
        ++shared;
        if (ca != cb) ++differing;
    }
    if (shared == 0) return std::nullopt;
    return static_cast<double>(differing) / static_cast<double>(shared);
}

} // namespace

std::pair<CategoricalTable, PreprocessReport>
impute(const CategoricalTable& table, ImputeMethod method, int k, std::uint64_t seed) {
    PreprocessReport report;
    CategoricalTable out = table;
    std::mt19937_64 rng(seed);

    // Per-feature mode, also the kNN fallback.
    std::vector<int> mode_code(table.feature_count());
    for (size_t f = 0; f < table.feature_count(); ++f) {
        std::vector<size_t> counts(table.category_labels[f].size(), 0);
        size_t observed = 0;
        for (size_t s = 0; s < table.sample_count(); ++s) {
            const int c = table.cell(s, f);
            if (c == kMissing) continue;
            ++counts[static_cast<size_t>(c)];
            ++observed;
        }
        if (observed == 0)
            throw Error("impute: feature " + table.feature_ids[f] + " has no observed values");
        mode_code[f] = majority_code(counts, rng);
    }

    for (size_t s = 0; s < table.sample_count(); ++s) {
        for (size_t f = 0; f < table.feature_count(); ++f) {
            if (table.cell(s, f) != kMissing) continue;
            ++report.imputed_cell_count;
            if (method == ImputeMethod::kMode) {
                out.cell(s, f) = mode_code[f];
                continue;
            }
            // Donors ranked by Gower distance computed on the original table.
            std::vector<std::pair<double, size_t>> donors;
            for (size_t d = 0; d < table.sample_count(); ++d) {
                if (d == s || table.cell(d, f) == kMissing) continue;
                if (auto dist = gower_distance(table, s, d))
                    donors.push_back({*dist, d});
            }
            if (donors.empty()) {
                out.cell(s, f) = mode_code[f];
                continue;
            }
            std::stable_sort(donors.begin(), donors.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            const size_t take = std::min<size_t>(static_cast<size_t>(std::max(k, 1)),
                                                 donors.size());
            std::vector<size_t> counts(table.category_labels[f].size(), 0);
            for (size_t i = 0; i < take; ++i)
                ++counts[static_cast<size_t>(table.cell(donors[i].second, f))];
            out.cell(s, f) = majority_code(counts, rng);
        }
    }
    return {std::move(out), std::move(report)};
}

} // namespace topolect
