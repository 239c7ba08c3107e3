// Apache License, Version 2.0, refer to LICENSE.txt
#include "fixture.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace topolect::testing {

namespace {

constexpr int kLoopFeatures = 24;
constexpr int kWindow = 6;
constexpr int kRotations = 6; // background samples = kRotations * kLoopFeatures
constexpr int kFillers = 2;
constexpr int kLoopyCount = 2;
constexpr int kPlainCount = 6;

/// Deterministic bit mixer; keeps filler and ternary values uncorrelated
/// with the ring position.
unsigned mix(unsigned x) {
    x ^= x >> 16;
    x *= 2654435761u;
    x ^= x >> 13;
    x *= 2246822519u;
    x ^= x >> 16;
    return x;
}

} // namespace

SyntheticDataset make_synthetic_dataset(const std::string& output_dir) {
    std::vector<std::string> features;
    for (int i = 0; i < kLoopFeatures; ++i) features.push_back("L" + std::to_string(i));
    for (int j = 0; j < kFillers; ++j) features.push_back("X" + std::to_string(j));

    std::string values = "Language_ID,Parameter_ID,Value\n";
    const char* ternary[3] = {"XY", "YX", "both"};
    int index = 0;

    auto emit_common = [&](const std::string& id) {
        values += id + ",T1," + ternary[mix(static_cast<unsigned>(index) * 3 + 1) % 3] + "\n";
        values += id + ",CONST,c\n";
        // SPARSE stays unobserved for two thirds of the samples, putting it
        // past the missingness threshold.
        if (mix(static_cast<unsigned>(index) * 5 + 2) % 3 == 0)
            values += id + ",SPARSE," + std::to_string(mix(static_cast<unsigned>(index)) % 2) +
                      "\n";
    };
    auto emit_background = [&](const std::string& id, int start) {
        for (int i = 0; i < kLoopFeatures; ++i) {
            const int offset = (i - start + kLoopFeatures) % kLoopFeatures;
            values += id + "," + features[i] + "," + (offset < kWindow ? "1" : "0") + "\n";
        }
        for (int j = 0; j < kFillers; ++j)
            if (mix(static_cast<unsigned>(index) * 7 + static_cast<unsigned>(j)) % 9 != 0)
                values += id + "," + features[kLoopFeatures + j] + "," +
                          std::to_string(mix(static_cast<unsigned>(index) * 11 +
                                             static_cast<unsigned>(j) * 13) %
                                         2) +
                          "\n";
        emit_common(id);
        ++index;
    };

    // Sliding windows of the rare value around the ring give the loop
    // features their cyclic co-occurrence.
    for (int t = 0; t < kRotations * kLoopFeatures; ++t)
        emit_background("bg" + std::to_string(t), t % kLoopFeatures);

    // Loopy group: the rare value everywhere on the ring; identical rows.
    for (int a = 0; a < kLoopyCount; ++a) {
        const std::string id = "loopy" + std::to_string(a);
        for (int i = 0; i < kLoopFeatures; ++i) values += id + "," + features[i] + ",1\n";
        for (int j = 0; j < kFillers; ++j)
            values += id + "," + features[kLoopFeatures + j] + ",0\n";
        values += id + ",T1,XY\n" + id + ",CONST,c\n";
        ++index;
    }
    // Plain group: common values only; identical rows.
    for (int b = 0; b < kPlainCount; ++b) {
        const std::string id = "plain" + std::to_string(b);
        for (int i = 0; i < kLoopFeatures; ++i) values += id + "," + features[i] + ",0\n";
        for (int j = 0; j < kFillers; ++j)
            values += id + "," + features[kLoopFeatures + j] + ",1\n";
        values += id + ",T1,YX\n" + id + ",CONST,c\n";
        ++index;
    }
    // Two dialects of one variety, excluded by the default config.
    emit_background("dialect1", 0);
    emit_background("dialect2", 0);

    SyntheticDataset out;
    out.values_csv = std::move(values);

    out.groups_csv = "Language_ID,Group\n";
    for (int a = 0; a < kLoopyCount; ++a)
        out.groups_csv += "loopy" + std::to_string(a) + ",loopy\n";
    for (int b = 0; b < kPlainCount; ++b)
        out.groups_csv += "plain" + std::to_string(b) + ",plain\n";

    out.config_json = std::string(R"({
  "input": {"path": "values.csv", "format": "long"},
  "exclusions": ["dialect1", "dialect2"],
  "drop_constant": true,
  "missingness_threshold": 0.20,
  "ternary": {"features": ["T1"], "both_label": "both"},
  "impute": {"method": "mode", "k": 3, "seed": 7},
  "mca": {"dimensions": 2},
  "persistence": {"max_dim": 1},
  "metric": {"kind": "wasserstein", "q": 2.0, "ground": "lq"},
  "permutation": {"count": 100, "seed": 7, "exact": true},
  "groups": {"file": "groups.csv"},
  "mds": {"dimensions": 2},
  "threads": 2,
  "output_dir": ")") + output_dir + "\"\n}\n";
    return out;
}

void write_synthetic_dataset(const std::string& dir, const std::string& output_dir) {
    const SyntheticDataset data = make_synthetic_dataset(output_dir);
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& content) {
        std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
        if (!out) throw std::runtime_error("fixture: cannot write " + name);
        out << content;
    };
    write("values.csv", data.values_csv);
    write("groups.csv", data.groups_csv);
    write("config.json", data.config_json);
}

} // namespace topolect::testing
