// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/permtest.hpp"

#include "topolect/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace topolect {

namespace {

/// Average distance over ordered pairs inside one index set; zero for a
/// singleton.
double average_within(const Matrix& dm, const std::vector<size_t>& members) {
    const size_t n = members.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (a != b) sum += dm(members[a], members[b]);
    return sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double loss(const Matrix& dm, const std::vector<size_t>& g1, const std::vector<size_t>& g2) {
    return 0.5 * (average_within(dm, g1) + average_within(dm, g2));
}

Matrix pooled_distances(const std::vector<PersistenceDiagram>& group1,
                        const std::vector<PersistenceDiagram>& group2,
                        const DiagramMetric& metric) {
    std::vector<PersistenceDiagram> all;
    all.reserve(group1.size() + group2.size());
    all.insert(all.end(), group1.begin(), group1.end());
    all.insert(all.end(), group2.begin(), group2.end());
    if (all.size() < 2) throw Error("permtest: need at least two diagrams in total");
    const size_t n = all.size();
    Matrix dm(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) dm(i, j) = dm(j, i) = metric(all[i], all[j]);
    return dm;
}

std::int64_t binomial(std::int64_t n, std::int64_t k, std::int64_t cap) {
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

} // namespace

double group_loss_from_matrix(const Matrix& dm, size_t n1) {
    if (n1 == 0 || n1 >= dm.rows()) throw Error("permtest: both groups must be non-empty");
    std::vector<size_t> g1(n1), g2(dm.rows() - n1);
    std::iota(g1.begin(), g1.end(), size_t{0});
    std::iota(g2.begin(), g2.end(), n1);
    return loss(dm, g1, g2);
}

double group_loss(const std::vector<PersistenceDiagram>& group1,
                  const std::vector<PersistenceDiagram>& group2, const DiagramMetric& metric) {
    if (group1.empty() || group2.empty())
        throw Error("permtest: both groups must be non-empty");
    return group_loss_from_matrix(pooled_distances(group1, group2, metric), group1.size());
}

TestResult permutation_test_from_matrix(const Matrix& dm, size_t n1,
                                        const std::string& metric_name, std::int64_t shuffles,
                                        std::uint64_t seed) {
    if (shuffles < 1) throw Error("permtest: shuffle count must be at least 1");
    if (n1 == 0 || n1 >= dm.rows()) throw Error("permtest: both groups must be non-empty");
    const size_t n = dm.rows();

    TestResult result;
    result.mode = TestResult::Mode::kRandomized;
    result.metric = metric_name;
    result.seed = seed;
    result.total = shuffles;
    result.observed_loss = group_loss_from_matrix(dm, n1);

    std::mt19937_64 rng(seed);
    std::vector<size_t> indices(n);
    std::iota(indices.begin(), indices.end(), size_t{0});
    for (std::int64_t trial = 0; trial < shuffles; ++trial) {
        std::vector<size_t> g1, g2;
        // The observed partition is what the +1 in (Z+1)/(N+1) stands for;
        // draws that reproduce it are redrawn.
        do {
            std::shuffle(indices.begin(), indices.end(), rng);
            g1.assign(indices.begin(), indices.begin() + static_cast<long>(n1));
            g2.assign(indices.begin() + static_cast<long>(n1), indices.end());
            std::sort(g1.begin(), g1.end());
        } while (g1.back() < n1);
        std::sort(g2.begin(), g2.end());
        if (loss(dm, g1, g2) <= result.observed_loss) ++result.count_leq;
    }
    result.p_value = static_cast<double>(result.count_leq + 1) /
                     static_cast<double>(result.total + 1);
    return result;
}

TestResult permutation_test(const std::vector<PersistenceDiagram>& group1,
                            const std::vector<PersistenceDiagram>& group2,
                            const DiagramMetric& metric, std::int64_t shuffles,
                            std::uint64_t seed) {
    if (group1.empty() || group2.empty())
        throw Error("permtest: both groups must be non-empty");
    return permutation_test_from_matrix(pooled_distances(group1, group2, metric),
                                        group1.size(), metric.describe(), shuffles, seed);
}

TestResult exact_permutation_test_from_matrix(const Matrix& dm, size_t n1,
                                              const std::string& metric_name,
                                              std::int64_t partition_cap) {
    if (n1 == 0 || n1 >= dm.rows()) throw Error("permtest: both groups must be non-empty");
    const size_t n = dm.rows();
    const std::int64_t total =
        binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n1), partition_cap);
    if (total > partition_cap)
        throw Error("permtest: more than " + std::to_string(partition_cap) +
                    " partitions; use the randomized test");

    TestResult result;
    result.mode = TestResult::Mode::kExact;
    result.metric = metric_name;
    result.total = total;
    result.observed_loss = group_loss_from_matrix(dm, n1);

    // Enumerate all size-n1 subsets in lexicographic order.
    std::vector<size_t> subset(n1);
    std::iota(subset.begin(), subset.end(), size_t{0});
    while (true) {
        std::vector<size_t> g2;
        g2.reserve(n - n1);
        size_t cursor = 0;
        for (size_t i = 0; i < n; ++i) {
            if (cursor < n1 && subset[cursor] == i) ++cursor;
            else g2.push_back(i);
        }
        if (loss(dm, subset, g2) <= result.observed_loss) ++result.count_leq;

        // next combination
        size_t k = n1;
        while (k > 0 && subset[k - 1] == n - n1 + k - 1) --k;
        if (k == 0) break;
        ++subset[k - 1];
        for (size_t i = k; i < n1; ++i) subset[i] = subset[i - 1] + 1;
    }
    result.p_value = static_cast<double>(result.count_leq) / static_cast<double>(result.total);
    return result;
}

TestResult exact_permutation_test(const std::vector<PersistenceDiagram>& group1,
                                  const std::vector<PersistenceDiagram>& group2,
                                  const DiagramMetric& metric, std::int64_t partition_cap) {
    if (group1.empty() || group2.empty())
        throw Error("permtest: both groups must be non-empty");
    return exact_permutation_test_from_matrix(pooled_distances(group1, group2, metric),
                                              group1.size(), metric.describe(), partition_cap);
}

} // namespace topolect
