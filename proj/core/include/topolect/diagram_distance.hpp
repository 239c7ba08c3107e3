// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/matrix.hpp"
#include "topolect/persistence.hpp"

#include <string>
#include <vector>

namespace topolect {

/// Norm used inside the matching cost between two diagram points.
enum class GroundMetric { kLq, kLinf };

/// Drop essential (infinite-death) classes.
PersistenceDiagram strip_essentials(const PersistenceDiagram& diagram);
/// Replace every infinite death by the given finite value.
PersistenceDiagram cap_essentials(const PersistenceDiagram& diagram, double cap);

/// The diagonal-augmented matching problem behind both distances. Rows are
/// A's points followed by B's diagonal slots, columns are B's points
/// followed by A's diagonal slots, so the matrix is square of side
/// |A| + |B|. A real point pays the ground distance to the other real point
/// or, for any diagonal slot, the distance to its own projection
/// ((b+d)/2, (b+d)/2); diagonal-to-diagonal entries cost nothing.
struct MatchingProblem {
    size_t left_points = 0;  // |A|
    size_t right_points = 0; // |B|
    Matrix cost;             // ground costs, not yet raised to any power
    GroundMetric ground = GroundMetric::kLq;
    double q = 2.0;
};

MatchingProblem build_matching_problem(const PersistenceDiagram& a,
                                       const PersistenceDiagram& b, double q,
                                       GroundMetric ground = GroundMetric::kLq);

/// q-Wasserstein distance between two finite-death diagrams: the optimal
/// diagonal-augmented matching of the two point sets. Solved exactly as a
/// linear assignment on the q-th powers of the ground costs. Throws for
/// q < 1 or when an infinite death is present.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double q,
                   GroundMetric ground = GroundMetric::kLq);

/// Bottleneck distance: the minimal largest L-infinity matching cost,
/// found by binary search over candidate costs with a feasibility matching.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Which diagram distance to use, carried through the pipeline.
struct DiagramMetric {
    enum class Kind { kWasserstein, kBottleneck };
    Kind kind = Kind::kWasserstein;
    double q = 2.0;
    GroundMetric ground = GroundMetric::kLq;

    double operator()(const PersistenceDiagram& a, const PersistenceDiagram& b) const;
    std::string describe() const;
};

/// Symmetric matrix of pairwise diagram distances, entries in input order.
Matrix distance_matrix(const std::vector<PersistenceDiagram>& diagrams,
                       const DiagramMetric& metric);

} // namespace topolect
