// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/persistence.hpp"

#include "topolect/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace topolect {

std::vector<Simplex> boundary(const Simplex& simplex) {
    std::vector<Simplex> facets;
    if (simplex.dimension() < 1) return facets;
    facets.reserve(simplex.vertices.size());
    for (size_t skip = 0; skip < simplex.vertices.size(); ++skip) {
        Simplex facet;
        facet.vertices.reserve(simplex.vertices.size() - 1);
        for (size_t i = 0; i < simplex.vertices.size(); ++i)
            if (i != skip) facet.vertices.push_back(simplex.vertices[i]);
        facets.push_back(std::move(facet));
    }
    return facets;
}

void Filtration::sort_and_finalize() {
    std::sort(entries_.begin(), entries_.end(), [](const FiltrationEntry& a, const FiltrationEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.simplex.dimension() != b.simplex.dimension())
            return a.simplex.dimension() < b.simplex.dimension();
        return a.simplex.vertices < b.simplex.vertices;
    });
    max_dim_ = -1;
    for (const auto& e : entries_) max_dim_ = std::max(max_dim_, e.simplex.dimension());
}

Filtration Filtration::from_simplices(std::vector<FiltrationEntry> entries) {
    Filtration f;
    f.entries_ = std::move(entries);
    for (auto& e : f.entries_) {
        std::sort(e.simplex.vertices.begin(), e.simplex.vertices.end());
        if (std::adjacent_find(e.simplex.vertices.begin(), e.simplex.vertices.end()) !=
            e.simplex.vertices.end())
            throw Error("filtration: simplex has repeated vertices");
        if (e.simplex.vertices.empty())
            throw Error("filtration: empty simplex");
    }
    std::map<std::vector<int>, double> value_of;
    for (const auto& e : f.entries_) {
        auto [it, inserted] = value_of.try_emplace(e.simplex.vertices, e.value);
        if (!inserted) throw Error("filtration: duplicate simplex");
    }
    for (const auto& e : f.entries_) {
        for (const auto& facet : boundary(e.simplex)) {
            auto it = value_of.find(facet.vertices);
            auto describe = [](const Simplex& s) {
                std::string d = "<";
                for (size_t i = 0; i < s.vertices.size(); ++i)
                    d += (i ? "," : "") + std::to_string(s.vertices[i]);
                return d + ">";
            };
            if (it == value_of.end())
                throw Error("filtration: face " + describe(facet) + " of " +
                            describe(e.simplex) + " is missing");
            if (it->second > e.value)
                throw Error("filtration: face " + describe(facet) + " enters later than " +
                            describe(e.simplex));
        }
    }
    f.sort_and_finalize();
    return f;
}

Matrix pairwise_distances(const PointCloud& cloud) {
    std::vector<std::vector<double>> coords;
    coords.reserve(cloud.points.size());
    for (const auto& p : cloud.points) coords.push_back(p.coords);
    return pairwise_distances(coords);
}

Matrix pairwise_distances(const SubCloud& cloud) {
    std::vector<std::vector<double>> coords;
    coords.reserve(cloud.points.size());
    for (const auto& p : cloud.points) coords.push_back(p.coords);
    return pairwise_distances(coords);
}

Matrix pairwise_distances(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw Error("distances: empty point cloud");
    const size_t n = points.size();
    Matrix dm(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (size_t k = 0; k < points[i].size(); ++k) {
                const double diff = points[i][k] - points[j][k];
                sum += diff * diff;
            }
            dm(i, j) = dm(j, i) = std::sqrt(sum);
        }
    return dm;
}

double max_distance(const Matrix& dm) {
    double best = 0.0;
    for (size_t i = 0; i < dm.rows(); ++i)
        for (size_t j = i + 1; j < dm.cols(); ++j) best = std::max(best, dm(i, j));
    return best;
}

Filtration rips_filtration(const Matrix& dm, int max_dim, double max_scale,
                           size_t simplex_budget) {
    if (max_dim < 0) throw Error("rips: max_dim must be non-negative");
    if (max_scale < 0) throw Error("rips: max_scale must be non-negative");
    const int n = static_cast<int>(dm.rows());

    Filtration f;
    auto push = [&](Simplex s, double value) {
        if (f.entries_.size() >= simplex_budget)
            throw Error("rips: simplex budget of " + std::to_string(simplex_budget) +
                        " exceeded; lower max_dim or max_scale");
        f.entries_.push_back({std::move(s), value});
    };

    for (int v = 0; v < n; ++v) push(Simplex{{v}}, 0.0);

    // Grow cliques a dimension at a time; the diameter is the longest edge.
    std::vector<std::pair<Simplex, double>> frontier;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dm(i, j) <= max_scale) frontier.push_back({Simplex{{i, j}}, dm(i, j)});
    for (const auto& [s, value] : frontier) push(s, value);

    for (int dim = 2; dim <= max_dim && !frontier.empty(); ++dim) {
        std::vector<std::pair<Simplex, double>> next;
        for (const auto& [s, diam] : frontier) {
            for (int u = s.vertices.back() + 1; u < n; ++u) {
                double extended = diam;
                bool ok = true;
                for (int w : s.vertices) {
                    const double d = dm(w, u);
                    if (d > max_scale) { ok = false; break; }
                    extended = std::max(extended, d);
                }
                if (!ok) continue;
                Simplex grown = s;
                grown.vertices.push_back(u);
                push(grown, extended);
                next.push_back({std::move(grown), extended});
            }
        }
        frontier = std::move(next);
    }
    f.sort_and_finalize();
    f.built_dim_ = max_dim;
    return f;
}

namespace {

/// xor-merge of two sorted index chains.
void add_into(std::vector<size_t>& target, const std::vector<size_t>& other) {
    std::vector<size_t> merged;
    merged.reserve(target.size() + other.size());
    size_t a = 0, b = 0;
    while (a < target.size() && b < other.size()) {
        if (target[a] < other[b]) merged.push_back(target[a++]);
        else if (other[b] < target[a]) merged.push_back(other[b++]);
        else { ++a; ++b; }
    }
    merged.insert(merged.end(), target.begin() + a, target.end());
    merged.insert(merged.end(), other.begin() + b, other.end());
    target = std::move(merged);
}

struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

Reduction reduce(const Filtration& filtration, const ReduceOptions& options) {
    const size_t n = filtration.size();
    Reduction red;
    red.filtration = filtration;
    red.reduced.resize(n);
    red.additions.resize(n);

    std::unordered_map<std::vector<int>, size_t, VectorHash> index_of;
    index_of.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) index_of[filtration.simplex(i).vertices] = i;

    // pivot row -> column owning it
    std::vector<size_t> owner(n, kNoIndex);
    std::vector<bool> cleared(n, false);
    std::vector<bool> is_zero(n, false);

    auto reduce_column = [&](size_t j) {
        auto& column = red.reduced[j];
        column.clear();
        for (const auto& facet : boundary(filtration.simplex(j)))
            column.push_back(index_of.at(facet.vertices));
        std::sort(column.begin(), column.end());
        while (!column.empty()) {
            const size_t pivot = column.back();
            const size_t other = owner[pivot];
            if (other == kNoIndex) break;
            add_into(column, red.reduced[other]);
            red.additions[j].push_back(other);
        }
        if (column.empty()) {
            is_zero[j] = true;
        } else {
            owner[column.back()] = j;
            red.pairs.push_back({filtration.simplex(column.back()).dimension(),
                                 column.back(), j});
            if (options.clearing) cleared[column.back()] = true;
        }
    };

    if (options.clearing) {
        // Deaths in dimension d mark their birth columns in dimension d-1 as
        // known-zero, so sweep dimensions from the top down.
        for (int dim = filtration.max_dimension(); dim >= 0; --dim)
            for (size_t j = 0; j < n; ++j) {
                if (filtration.simplex(j).dimension() != dim) continue;
                if (cleared[j]) { is_zero[j] = true; continue; }
                reduce_column(j);
            }
    } else {
        for (size_t j = 0; j < n; ++j) reduce_column(j);
    }

    for (size_t j = 0; j < n; ++j)
        if (is_zero[j] && owner[j] == kNoIndex)
            red.pairs.push_back({filtration.simplex(j).dimension(), j, kNoIndex});

    std::sort(red.pairs.begin(), red.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        return a.birth_index < b.birth_index;
    });
    return red;
}

PersistenceDiagram diagram(const Reduction& reduction, int p) {
    if (p < 0) throw Error("diagram: dimension must be non-negative");
    if (p > reduction.filtration.built_dimension() - 1)
        throw Error("diagram: deaths in dimension " + std::to_string(p) +
                    " need the complex built through dimension " + std::to_string(p + 1) +
                    "; rebuild the filtration with a higher max_dim");
    PersistenceDiagram dgm;
    dgm.dim = p;
    for (const auto& pair : reduction.pairs) {
        if (pair.dim != p) continue;
        DiagramPoint point;
        point.birth = reduction.filtration.value(pair.birth_index);
        point.birth_index = pair.birth_index;
        if (pair.death_index == kNoIndex) {
            point.death = kInfiniteDeath;
        } else {
            point.death = reduction.filtration.value(pair.death_index);
            point.death_index = pair.death_index;
            if (!(point.death > point.birth)) continue; // zero persistence
        }
        dgm.points.push_back(point);
    }
    return dgm;
}

PersistenceDiagram diagram(const Filtration& filtration, int p) {
    return diagram(reduce(filtration), p);
}

int betti_at(const PersistenceDiagram& diagram, double t) {
    int alive = 0;
    for (const auto& point : diagram.points)
        if (point.birth <= t && t < point.death) ++alive;
    return alive;
}

std::vector<Simplex> representative_cycle(const Reduction& reduction, const DiagramPoint& point) {
    if (point.essential())
        throw Error("cycle: essential class has no death column; request the essential cycle");
    std::vector<Simplex> chain;
    for (size_t idx : reduction.reduced[point.death_index])
        chain.push_back(reduction.filtration.simplex(idx));
    return chain;
}

std::vector<size_t> Reduction::column_combination(size_t j) const {
    // Expand {j} plus the transitive additions, mod 2. Post-order over an
    // explicit stack; memoized per column.
    std::map<size_t, std::vector<size_t>> memo;
    std::vector<std::pair<size_t, bool>> stack{{j, false}};
    while (!stack.empty()) {
        auto [col, expanded] = stack.back();
        stack.pop_back();
        if (memo.count(col)) continue;
        if (!expanded) {
            stack.push_back({col, true});
            for (size_t other : additions[col])
                if (!memo.count(other)) stack.push_back({other, false});
            continue;
        }
        std::vector<size_t> result{col};
        for (size_t other : additions[col]) add_into(result, memo.at(other));
        memo.emplace(col, std::move(result));
    }
    return memo.at(j);
}

std::vector<Simplex> essential_cycle(const Reduction& reduction, const DiagramPoint& point) {
    if (!point.essential())
        throw Error("cycle: class is not essential; use representative_cycle");
    std::vector<Simplex> chain;
    for (size_t idx : reduction.column_combination(point.birth_index))
        chain.push_back(reduction.filtration.simplex(idx));
    return chain;
}

std::vector<int> chain_vertices(const std::vector<Simplex>& chain) {
    std::vector<int> vertices;
    for (const auto& s : chain)
        vertices.insert(vertices.end(), s.vertices.begin(), s.vertices.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

} // namespace topolect
