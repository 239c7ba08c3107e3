// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/matrix.hpp"

#include <vector>

namespace topolect {

/// Exact minimum-cost perfect matching on a square cost matrix, by shortest
/// augmenting paths with dual potentials. Returns the matched column of each
/// row; costs must be finite.
std::vector<size_t> solve_assignment(const Matrix& cost);

/// Total cost of an assignment returned by solve_assignment.
double assignment_cost(const Matrix& cost, const std::vector<size_t>& col_of_row);

/// Smallest bound c such that a perfect matching exists using only entries
/// with cost <= c; the bottleneck assignment value. Binary search over the
/// distinct entries with an augmenting-path feasibility check.
double solve_bottleneck_assignment(const Matrix& cost);

} // namespace topolect
