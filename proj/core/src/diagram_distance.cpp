// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/diagram_distance.hpp"

#include "topolect/assignment.hpp"
#include "topolect/error.hpp"

#include <algorithm>
#include <cmath>

namespace topolect {

PersistenceDiagram strip_essentials(const PersistenceDiagram& diagram) {
    PersistenceDiagram out;
    out.dim = diagram.dim;
    for (const auto& p : diagram.points)
        if (!p.essential()) out.points.push_back(p);
    return out;
}

PersistenceDiagram cap_essentials(const PersistenceDiagram& diagram, double cap) {
    PersistenceDiagram out;
    out.dim = diagram.dim;
    for (auto p : diagram.points) {
        if (p.essential()) {
            p.death = cap;
            p.death_index = kNoIndex;
        }
        if (p.death > p.birth) out.points.push_back(p);
    }
    return out;
}

namespace {

void require_finite(const PersistenceDiagram& d) {
    for (const auto& p : d.points)
        if (std::isinf(p.death))
            throw Error("distance: diagram contains an infinite death; strip or cap "
                        "essential classes first");
}

double ground_cost(const DiagramPoint& a, const DiagramPoint& b, double q, GroundMetric ground) {
    const double db = std::abs(a.birth - b.birth);
    const double dd = std::abs(a.death - b.death);
    if (ground == GroundMetric::kLinf) return std::max(db, dd);
    return std::pow(std::pow(db, q) + std::pow(dd, q), 1.0 / q);
}

/// Ground distance from a point to its own diagonal projection.
double diagonal_cost(const DiagramPoint& p, double q, GroundMetric ground) {
    const double half_gap = (p.death - p.birth) / 2.0;
    if (ground == GroundMetric::kLinf) return half_gap;
    return half_gap * std::pow(2.0, 1.0 / q);
}

/// Fixed evaluation order for the two arguments, so that distances are
/// exactly symmetric despite floating accumulation order.
bool canonical_before(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    for (size_t i = 0; i < a.points.size(); ++i) {
        if (a.points[i].birth != b.points[i].birth) return a.points[i].birth < b.points[i].birth;
        if (a.points[i].death != b.points[i].death) return a.points[i].death < b.points[i].death;
    }
    return false;
}

/// Augmented square cost matrix: rows are A's points then B's diagonal
/// slots, columns are B's points then A's diagonal slots.
Matrix augmented_costs(const PersistenceDiagram& a, const PersistenceDiagram& b, double q,
                       GroundMetric ground, bool raise_to_q) {
    const size_t na = a.points.size(), nb = b.points.size();
    const size_t n = na + nb;
    Matrix cost(n, n);
    auto finish = [&](double c) { return raise_to_q ? std::pow(c, q) : c; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const bool row_real = i < na;
            const bool col_real = j < nb;
            double c;
            if (row_real && col_real)
                c = ground_cost(a.points[i], b.points[j], q, ground);
            else if (row_real)
                c = diagonal_cost(a.points[i], q, ground);
            else if (col_real)
                c = diagonal_cost(b.points[j], q, ground);
            else
                c = 0.0;
            cost(i, j) = finish(c);
        }
    return cost;
}

} // namespace

MatchingProblem build_matching_problem(const PersistenceDiagram& a,
                                       const PersistenceDiagram& b, double q,
                                       GroundMetric ground) {
    if (q < 1.0) throw Error("distance: Wasserstein order q must be at least 1");
    require_finite(a);
    require_finite(b);
    MatchingProblem problem;
    problem.left_points = a.points.size();
    problem.right_points = b.points.size();
    problem.ground = ground;
    problem.q = q;
    problem.cost = augmented_costs(a, b, q, ground, /*raise_to_q=*/false);
    return problem;
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double q,
                   GroundMetric ground) {
    if (q < 1.0) throw Error("distance: Wasserstein order q must be at least 1");
    require_finite(a);
    require_finite(b);
    if (a.points.empty() && b.points.empty()) return 0.0;
    if (canonical_before(b, a)) return wasserstein(b, a, q, ground);
    const Matrix cost = augmented_costs(a, b, q, ground, /*raise_to_q=*/true);
    const auto match = solve_assignment(cost);
    const double total = assignment_cost(cost, match);
    return std::pow(std::max(total, 0.0), 1.0 / q);
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    require_finite(a);
    require_finite(b);
    if (a.points.empty() && b.points.empty()) return 0.0;
    if (canonical_before(b, a)) return bottleneck(b, a);
    const Matrix cost =
        augmented_costs(a, b, /*q=*/1.0, GroundMetric::kLinf, /*raise_to_q=*/false);
    return solve_bottleneck_assignment(cost);
}

double DiagramMetric::operator()(const PersistenceDiagram& a,
                                 const PersistenceDiagram& b) const {
    return kind == Kind::kBottleneck ? bottleneck(a, b) : wasserstein(a, b, q, ground);
}

std::string DiagramMetric::describe() const {
    if (kind == Kind::kBottleneck) return "bottleneck";
    std::string g = ground == GroundMetric::kLinf ? "linf" : "lq";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "wasserstein(q=%g,ground=%s)", q, g.c_str());
    return buf;
}

Matrix distance_matrix(const std::vector<PersistenceDiagram>& diagrams,
                       const DiagramMetric& metric) {
    if (diagrams.size() < 2) throw Error("distance: need at least two diagrams");
    const size_t n = diagrams.size();
    Matrix dm(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            dm(i, j) = dm(j, i) = metric(diagrams[i], diagrams[j]);
    return dm;
}

} // namespace topolect
