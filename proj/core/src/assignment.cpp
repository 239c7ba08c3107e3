// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/assignment.hpp"

#include "topolect/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace topolect {

std::vector<size_t> solve_assignment(const Matrix& cost) {
    if (cost.rows() != cost.cols()) throw Error("assignment: cost matrix must be square");
    const size_t n = cost.rows();
    if (n == 0) return {};
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // 1-based arrays; p[j] is the row matched to column j, p[0] is scratch.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);

    for (size_t i = 1; i <= n; ++i) {
        p[0] = i;
        size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const size_t i0 = p[j0];
            double delta = kInf;
            size_t j1 = 0;
            for (size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (size_t j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<size_t> col_of_row(n);
    for (size_t j = 1; j <= n; ++j) col_of_row[p[j] - 1] = j - 1;
    return col_of_row;
}

double assignment_cost(const Matrix& cost, const std::vector<size_t>& col_of_row) {
    double total = 0.0;
    for (size_t i = 0; i < col_of_row.size(); ++i) total += cost(i, col_of_row[i]);
    return total;
}

namespace {

bool try_augment(const Matrix& cost, double bound, size_t row, std::vector<bool>& visited,
                 std::vector<size_t>& row_of_col) {
    const size_t n = cost.cols();
    for (size_t j = 0; j < n; ++j) {
        if (visited[j] || cost(row, j) > bound) continue;
        visited[j] = true;
        if (row_of_col[j] == static_cast<size_t>(-1) ||
            try_augment(cost, bound, row_of_col[j], visited, row_of_col)) {
            row_of_col[j] = row;
            return true;
        }
    }
    return false;
}

bool feasible(const Matrix& cost, double bound) {
    const size_t n = cost.rows();
    std::vector<size_t> row_of_col(n, static_cast<size_t>(-1));
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> visited(n, false);
        if (!try_augment(cost, bound, i, visited, row_of_col)) return false;
    }
    return true;
}

} // namespace

double solve_bottleneck_assignment(const Matrix& cost) {
    if (cost.rows() != cost.cols()) throw Error("assignment: cost matrix must be square");
    const size_t n = cost.rows();
    if (n == 0) return 0.0;

    std::vector<double> candidates(cost.data());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    size_t lo = 0, hi = candidates.size() - 1;
    if (!feasible(cost, candidates[hi]))
        throw Error("assignment: no perfect matching exists at any bound");
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        if (feasible(cost, candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return candidates[lo];
}

} // namespace topolect
