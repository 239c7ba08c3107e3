// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/diagram_distance.hpp"
#include "topolect/matrix.hpp"
#include "topolect/persistence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace topolect {

struct TestResult {
    double observed_loss = 0.0;
    /// Shuffles (or partitions) whose loss is at most the observed one.
    std::int64_t count_leq = 0;
    /// Number of shuffles, or the total number of partitions in exact mode.
    std::int64_t total = 0;
    double p_value = 1.0;
    enum class Mode { kRandomized, kExact } mode = Mode::kRandomized;
    std::string metric;
    std::uint64_t seed = 0;
};

/// Group cohesion loss: half the sum of the two within-group average
/// pairwise distances, each average taken over ordered pairs with the
/// 1/(n(n-1)) normalization. A singleton group contributes zero.
double group_loss(const std::vector<PersistenceDiagram>& group1,
                  const std::vector<PersistenceDiagram>& group2, const DiagramMetric& metric);

/// Randomized permutation test: N seeded uniform re-partitions into the
/// original group sizes; p = (Z+1)/(N+1) where Z counts shuffles with loss
/// at most the observed loss. All pairwise distances are computed once.
TestResult permutation_test(const std::vector<PersistenceDiagram>& group1,
                            const std::vector<PersistenceDiagram>& group2,
                            const DiagramMetric& metric, std::int64_t shuffles,
                            std::uint64_t seed);

/// Exact test: enumerate all C(n1+n2, n1) labeled partitions; the observed
/// partition is included, so the count is at least one and p = count/total.
/// Throws when the partition count exceeds the cap.
TestResult exact_permutation_test(const std::vector<PersistenceDiagram>& group1,
                                  const std::vector<PersistenceDiagram>& group2,
                                  const DiagramMetric& metric,
                                  std::int64_t partition_cap = 1'000'000);

/// The same tests on a precomputed distance matrix (first n1 indices are
/// group 1). Used by the pipeline, where the matrix is already on disk.
double group_loss_from_matrix(const Matrix& dm, size_t n1);
TestResult permutation_test_from_matrix(const Matrix& dm, size_t n1,
                                        const std::string& metric_name,
                                        std::int64_t shuffles, std::uint64_t seed);
TestResult exact_permutation_test_from_matrix(const Matrix& dm, size_t n1,
                                              const std::string& metric_name,
                                              std::int64_t partition_cap = 1'000'000);

} // namespace topolect
