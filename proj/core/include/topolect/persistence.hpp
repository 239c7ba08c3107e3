// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include "topolect/cloud.hpp"
#include "topolect/matrix.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace topolect {

/// An abstract simplex: strictly increasing vertex indices.
struct Simplex {
    std::vector<int> vertices;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
    auto operator<=>(const Simplex&) const = default;
};

/// The facets of a simplex, one vertex removed at a time; empty for vertices.
std::vector<Simplex> boundary(const Simplex& simplex);

struct FiltrationEntry {
    Simplex simplex;
    double value = 0.0;
};

/// A filtered simplicial complex: entries sorted by (value, dimension,
/// vertex order), so faces never come after their cofaces.
class Filtration {
public:
    Filtration() = default;
    /// Validates face closure and value monotonicity, then sorts. The given
    /// complex is taken literally: absent simplices are genuinely absent, so
    /// diagrams of every dimension are trusted.
    static Filtration from_simplices(std::vector<FiltrationEntry> entries);

    const std::vector<FiltrationEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    const Simplex& simplex(size_t i) const { return entries_[i].simplex; }
    double value(size_t i) const { return entries_[i].value; }
    /// Largest dimension actually present.
    int max_dimension() const { return max_dim_; }
    /// Dimension through which the complex is known complete. A Rips build
    /// truncated at max_dim is complete only through max_dim; dimension-p
    /// deaths are reliable for p < built_dimension().
    int built_dimension() const { return built_dim_; }

private:
    std::vector<FiltrationEntry> entries_;
    int max_dim_ = -1;
    int built_dim_ = std::numeric_limits<int>::max();
    friend Filtration rips_filtration(const Matrix&, int, double, size_t);
    void sort_and_finalize();
};

/// Euclidean distance matrix of a point cloud.
Matrix pairwise_distances(const PointCloud& cloud);
Matrix pairwise_distances(const SubCloud& cloud);
Matrix pairwise_distances(const std::vector<std::vector<double>>& points);

/// Largest pairwise distance; the default filtration cutoff.
double max_distance(const Matrix& dm);

/// All simplices up to max_dim whose vertex set has diameter at most
/// max_scale; the filtration value of a simplex is its diameter (the longest
/// edge), zero for vertices. Throws when the simplex count would exceed
/// the budget.
Filtration rips_filtration(const Matrix& dm, int max_dim, double max_scale,
                           size_t simplex_budget = 20'000'000);

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();
inline constexpr size_t kNoIndex = static_cast<size_t>(-1);

struct PersistencePair {
    int dim = 0;                  // dimension of the class (of the birth simplex)
    size_t birth_index = kNoIndex;
    size_t death_index = kNoIndex; // kNoIndex marks an essential class
};

struct ReduceOptions {
    /// Skip columns already known to be paired births (twist optimization).
    bool clearing = false;
};

/// Result of reducing the boundary matrix over F2 in filtration order.
///
/// reduced[j] holds the surviving boundary chain of column j (sorted
/// indices); additions[j] lists the columns that were summed into column j,
/// in order, from which the cycle behind a zero column can be expanded.
struct Reduction {
    Filtration filtration;
    std::vector<PersistencePair> pairs; // sorted by birth index
    std::vector<std::vector<size_t>> reduced;
    std::vector<std::vector<size_t>> additions;

    /// The original-column combination behind column j ({j} plus the
    /// transitive additions, mod 2); a cycle when reduced[j] is empty.
    std::vector<size_t> column_combination(size_t j) const;
};

/// Standard persistence column reduction: repeatedly add earlier columns
/// sharing the same lowest nonzero row until the lowest row is unique or the
/// column vanishes. Coefficients are mod 2.
Reduction reduce(const Filtration& filtration, const ReduceOptions& options = {});

struct DiagramPoint {
    double birth = 0.0;
    double death = kInfiniteDeath;
    size_t birth_index = kNoIndex;
    size_t death_index = kNoIndex;

    bool essential() const { return death_index == kNoIndex; }
    double persistence() const { return death - birth; }
};

/// The dimension-p persistence diagram; classes that die the instant they
/// are born are dropped.
struct PersistenceDiagram {
    int dim = 0;
    std::vector<DiagramPoint> points;
};

/// Extract the dimension-p diagram. Deaths in dimension p are only reliable
/// when the complex was built through dimension p+1, so p must be at most
/// max_dimension() - 1.
PersistenceDiagram diagram(const Reduction& reduction, int p);
PersistenceDiagram diagram(const Filtration& filtration, int p);

/// Number of classes alive at threshold t: born at or before t, dead after.
int betti_at(const PersistenceDiagram& diagram, double t);

/// The cycle stored in the reduced column of the pair's death simplex.
/// Throws for essential classes (no death column); use essential_cycle.
std::vector<Simplex> representative_cycle(const Reduction& reduction, const DiagramPoint& point);

/// The unpaired cycle recorded for an essential class.
std::vector<Simplex> essential_cycle(const Reduction& reduction, const DiagramPoint& point);

/// Sorted union of the vertices of a chain.
std::vector<int> chain_vertices(const std::vector<Simplex>& chain);

} // namespace topolect
