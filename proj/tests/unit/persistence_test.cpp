// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/persistence.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "topolect/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace topolect;

namespace {

const std::vector<std::vector<double>> kUnitSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

Filtration triangle_boundary() {
    return Filtration::from_simplices({
        {Simplex{{0}}, 0}, {Simplex{{1}}, 0}, {Simplex{{2}}, 0},
        {Simplex{{0, 1}}, 0}, {Simplex{{1, 2}}, 0}, {Simplex{{0, 2}}, 0},
    });
}

} // namespace

TEST_CASE("pairwise distances of the unit square") {
    const auto dm = pairwise_distances(kUnitSquare);
    std::multiset<double> upper;
    for (size_t i = 0; i < 4; ++i) {
        CHECK(dm(i, i) == 0.0);
        for (size_t j = i + 1; j < 4; ++j) {
            CHECK(dm(i, j) == dm(j, i));
            upper.insert(dm(i, j));
        }
    }
    CHECK(upper.count(1.0) == 4);
    CHECK(upper.count(std::sqrt(2.0)) == 2);
}

TEST_CASE("a single point yields a one-by-one zero matrix") {
    const auto dm = pairwise_distances(testing::Points{{3.0, 4.0}});
    CHECK(dm.rows() == 1);
    CHECK(dm(0, 0) == 0.0);
}

TEST_CASE("pairwise distances match the naive double loop") {
    testing::Rng rng(71);
    const auto cloud = testing::random_cloud(rng, 10, 3);
    const auto dm = pairwise_distances(cloud);
    for (size_t i = 0; i < cloud.size(); ++i)
        for (size_t j = 0; j < cloud.size(); ++j) {
            double sum = 0.0;
            for (size_t k = 0; k < 3; ++k)
                sum += (cloud[i][k] - cloud[j][k]) * (cloud[i][k] - cloud[j][k]);
            CHECK(dm(i, j) == doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
        }
}

TEST_CASE("Rips filtration of an equilateral triangle") {
    const auto cloud = std::vector<std::vector<double>>{
        {0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    const auto f = rips_filtration(pairwise_distances(cloud), 2, 2.0);
    int vertices = 0, edges = 0, triangles = 0;
    for (const auto& e : f.entries()) {
        if (e.simplex.dimension() == 0) { CHECK(e.value == 0.0); ++vertices; }
        if (e.simplex.dimension() == 1) { CHECK(e.value == doctest::Approx(1.0)); ++edges; }
        if (e.simplex.dimension() == 2) { CHECK(e.value == doctest::Approx(1.0)); ++triangles; }
    }
    CHECK(vertices == 3);
    CHECK(edges == 3);
    CHECK(triangles == 1);
}

TEST_CASE("Rips scale cutoff excludes long edges") {
    const auto f = rips_filtration(pairwise_distances(testing::Points{{0.0}, {3.0}}), 1, 2.0);
    CHECK(f.size() == 2); // two vertices, no edge
}

TEST_CASE("Rips filtration of the unit square enumerates by diameter") {
    const auto f = rips_filtration(pairwise_distances(kUnitSquare), 2, std::sqrt(2.0));
    const double diag = std::sqrt(2.0);
    int side_edges = 0, diag_edges = 0, triangles = 0;
    for (const auto& e : f.entries()) {
        if (e.simplex.dimension() == 1) {
            if (e.value == doctest::Approx(1.0)) ++side_edges;
            if (e.value == doctest::Approx(diag)) ++diag_edges;
        }
        if (e.simplex.dimension() == 2) {
            CHECK(e.value == doctest::Approx(diag));
            ++triangles;
        }
    }
    CHECK(side_edges == 4);
    CHECK(diag_edges == 2);
    CHECK(triangles == 4);
    // faces sorted before cofaces
    std::map<std::vector<int>, size_t> position;
    for (size_t i = 0; i < f.size(); ++i) position[f.simplex(i).vertices] = i;
    for (size_t i = 0; i < f.size(); ++i)
        for (const auto& facet : boundary(f.simplex(i)))
            CHECK(position.at(facet.vertices) < i);
}

TEST_CASE("the simplex budget aborts oversized complexes") {
    testing::Rng rng(5);
    const auto cloud = testing::random_cloud(rng, 12, 2);
    const auto dm = pairwise_distances(cloud);
    CHECK_THROWS_WITH_AS(rips_filtration(dm, 3, max_distance(dm), 50),
                         doctest::Contains("budget"), Error);
}

TEST_CASE("explicit filtrations validate face closure and monotonicity") {
    CHECK_NOTHROW(triangle_boundary());
    CHECK_THROWS_WITH_AS(
        Filtration::from_simplices({{Simplex{{0, 1}}, 0}}),
        doctest::Contains("missing"), Error);
    CHECK_THROWS_WITH_AS(
        Filtration::from_simplices({{Simplex{{0}}, 0}, {Simplex{{1}}, 0.5},
                                    {Simplex{{0, 1}}, 0.2}}),
        doctest::Contains("later"), Error);
    // an edge arriving after its vertices is the normal case
    CHECK_NOTHROW(Filtration::from_simplices(
        {{Simplex{{0}}, 0}, {Simplex{{1}}, 0}, {Simplex{{0, 1}}, 1.0}}));
}

TEST_CASE("boundary removes one vertex at a time") {
    const auto facets = boundary(Simplex{{0, 1, 2}});
    REQUIRE(facets.size() == 3);
    CHECK(facets[0].vertices == std::vector<int>{1, 2});
    CHECK(facets[1].vertices == std::vector<int>{0, 2});
    CHECK(facets[2].vertices == std::vector<int>{0, 1});
    CHECK(boundary(Simplex{{4, 9}}).size() == 2);
    CHECK(boundary(Simplex{{5}}).empty());
}

TEST_CASE("the triangle boundary carries one essential circular class") {
    const auto dgm = diagram(reduce(triangle_boundary()), 1);
    REQUIRE(dgm.points.size() == 1);
    CHECK(dgm.points[0].birth == 0.0);
    CHECK(dgm.points[0].essential());
    for (double t : {0.0, 0.5, 1.0, 100.0}) CHECK(betti_at(dgm, t) == 1);
}

TEST_CASE("a filled equilateral triangle has no lasting circular class") {
    const auto cloud = std::vector<std::vector<double>>{
        {0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    const auto f = rips_filtration(pairwise_distances(cloud), 2, 2.0);
    const auto dgm = diagram(reduce(f), 1);
    CHECK(dgm.points.empty()); // the cycle dies the moment it is born
}

TEST_CASE("unit square diagrams in dimensions zero and one") {
    const auto f = rips_filtration(pairwise_distances(kUnitSquare), 2, std::sqrt(2.0));
    const auto red = reduce(f);

    const auto d1 = diagram(red, 1);
    REQUIRE(d1.points.size() == 1);
    CHECK(d1.points[0].birth == doctest::Approx(1.0));
    CHECK(d1.points[0].death == doctest::Approx(std::sqrt(2.0)));

    const auto d0 = diagram(red, 0);
    REQUIRE(d0.points.size() == 4);
    int essentials = 0, merges = 0;
    for (const auto& p : d0.points) {
        CHECK(p.birth == 0.0);
        if (p.essential()) ++essentials;
        else { CHECK(p.death == doctest::Approx(1.0)); ++merges; }
    }
    CHECK(essentials == 1);
    CHECK(merges == 3);

    CHECK(betti_at(d1, 1.2) == 1);
    CHECK(betti_at(d1, 1.5) == 0);
    CHECK(betti_at(PersistenceDiagram{}, 3.0) == 0);
}

TEST_CASE("trivial dimension-zero diagrams") {
    const auto single = rips_filtration(pairwise_distances(testing::Points{{0.0, 0.0}}), 1, 1.0);
    const auto d_single = diagram(reduce(single), 0);
    REQUIRE(d_single.points.size() == 1);
    CHECK(d_single.points[0].essential());

    const auto pair = rips_filtration(pairwise_distances(testing::Points{{0.0}, {0.7}}), 1, 1.0);
    const auto d_pair = diagram(reduce(pair), 0);
    REQUIRE(d_pair.points.size() == 2);
    int finite = 0;
    for (const auto& p : d_pair.points)
        if (!p.essential()) { CHECK(p.death == doctest::Approx(0.7)); ++finite; }
    CHECK(finite == 1);
}

TEST_CASE("diagram dimension beyond the built complex is rejected") {
    const auto f = rips_filtration(pairwise_distances(kUnitSquare), 1, 2.0);
    CHECK_THROWS_WITH_AS(diagram(reduce(f), 1), doctest::Contains("rebuild"), Error);
    CHECK_NOTHROW(diagram(reduce(f), 0));
}

TEST_CASE("representative of the square loop is its four sides") {
    const auto f = rips_filtration(pairwise_distances(kUnitSquare), 2, std::sqrt(2.0));
    const auto red = reduce(f);
    const auto d1 = diagram(red, 1);
    REQUIRE(d1.points.size() == 1);
    const auto chain = representative_cycle(red, d1.points[0]);
    REQUIRE(chain.size() == 4);
    for (const auto& s : chain) CHECK(s.dimension() == 1);
    CHECK(chain_vertices(chain) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(essential_cycle(red, d1.points[0]), Error);
}

TEST_CASE("essential classes expose their cycle on request") {
    const auto red = reduce(triangle_boundary());
    const auto d1 = diagram(red, 1);
    REQUIRE(d1.points.size() == 1);
    CHECK_THROWS_WITH_AS(representative_cycle(red, d1.points[0]),
                         doctest::Contains("essential"), Error);
    const auto cycle = essential_cycle(red, d1.points[0]);
    std::set<std::vector<int>> edges;
    for (const auto& s : cycle) edges.insert(s.vertices);
    CHECK(edges == std::set<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("double boundary vanishes over F2") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = testing::random_filtration(rng, 8, 3);
        for (const auto& entry : f.entries()) {
            std::map<std::vector<int>, int> counts;
            for (const auto& facet : boundary(entry.simplex))
                for (const auto& sub : boundary(facet)) ++counts[sub.vertices];
            for (const auto& [vertices, count] : counts) CHECK(count % 2 == 0);
        }
    }
}

TEST_CASE("no two reduced columns share a lowest row") {
    testing::Rng rng(404);
    const auto cloud = testing::random_cloud(rng, 9, 2);
    const auto dm = pairwise_distances(cloud);
    const auto red = reduce(rips_filtration(dm, 2, max_distance(dm)));
    std::set<size_t> pivots;
    for (const auto& column : red.reduced) {
        if (column.empty()) continue;
        CHECK(pivots.insert(column.back()).second);
    }
}

TEST_CASE("dimension-zero bookkeeping of a generic cloud") {
    testing::Rng rng(505);
    const auto cloud = testing::random_cloud(rng, 11, 2);
    const auto dm = pairwise_distances(cloud);
    const auto d0 = diagram(reduce(rips_filtration(dm, 2, max_distance(dm))), 0);
    CHECK(d0.points.size() == cloud.size());
    int essentials = 0;
    for (const auto& p : d0.points)
        if (p.essential()) ++essentials;
    CHECK(essentials == 1); // connected at full scale
}

TEST_CASE("births and deaths quote simplex filtration values of the right dimension") {
    testing::Rng rng(606);
    const auto cloud = testing::random_cloud(rng, 8, 2);
    const auto dm = pairwise_distances(cloud);
    const auto f = rips_filtration(dm, 2, max_distance(dm));
    const auto red = reduce(f);
    for (int p : {0, 1}) {
        for (const auto& point : diagram(red, p).points) {
            CHECK(f.simplex(point.birth_index).dimension() == p);
            CHECK(f.value(point.birth_index) == point.birth);
            if (!point.essential()) {
                CHECK(f.simplex(point.death_index).dimension() == p + 1);
                CHECK(f.value(point.death_index) == point.death);
            }
        }
    }
}

TEST_CASE("representative chains are cycles") {
    testing::Rng rng(707);
    const auto cloud = testing::random_cloud(rng, 10, 2);
    const auto dm = pairwise_distances(cloud);
    const auto red = reduce(rips_filtration(dm, 2, max_distance(dm)));
    for (const auto& point : diagram(red, 1).points) {
        const auto chain = point.essential() ? essential_cycle(red, point)
                                             : representative_cycle(red, point);
        std::map<std::vector<int>, int> counts;
        for (const auto& s : chain)
            for (const auto& facet : boundary(s)) ++counts[facet.vertices];
        for (const auto& [vertices, count] : counts) CHECK(count % 2 == 0);
    }
}

TEST_CASE("diagrams are invariant under vertex relabeling") {
    testing::Rng rng(808);
    const auto cloud = testing::random_cloud(rng, 9, 2);
    const auto base_dm = pairwise_distances(cloud);
    const auto base0 = testing::to_triples(
        diagram(reduce(rips_filtration(base_dm, 2, max_distance(base_dm))), 0));
    const auto base1 = testing::to_triples(
        diagram(reduce(rips_filtration(base_dm, 2, max_distance(base_dm))), 1));
    auto permuted = cloud;
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        std::shuffle(permuted.begin(), permuted.end(), rng);
        const auto dm = pairwise_distances(permuted);
        const auto red = reduce(rips_filtration(dm, 2, max_distance(dm)));
        CHECK(testing::to_triples(diagram(red, 0)) == base0);
        CHECK(testing::to_triples(diagram(red, 1)) == base1);
    }
}

TEST_CASE("the clearing optimization changes nothing observable") {
    testing::Rng rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        const auto cloud = testing::random_cloud(rng, 8, 2);
        const auto dm = pairwise_distances(cloud);
        const auto f = rips_filtration(dm, 2, max_distance(dm));
        const auto plain = reduce(f);
        const auto cleared = reduce(f, {.clearing = true});
        for (int p : {0, 1}) {
            CHECK(testing::to_triples(diagram(plain, p)) ==
                  testing::to_triples(diagram(cleared, p)));
        }
        // representatives from the cleared run still work
        for (const auto& point : diagram(cleared, 1).points)
            if (!point.essential())
                CHECK_FALSE(representative_cycle(cleared, point).empty());
    }
}
