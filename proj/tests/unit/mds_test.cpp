// Apache License, Version 2.0, refer to LICENSE.txt
#include "topolect/mds.hpp"

#include "generators.hpp"
#include "topolect/error.hpp"
#include "topolect/persistence.hpp"

#include <doctest.h>

#include <cmath>

using namespace topolect;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Matrix embedded_distances(const Embedding& e) {
    std::vector<std::vector<double>> coords(e.coordinates.rows());
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t k = 0; k < e.coordinates.cols(); ++k)
            coords[i].push_back(e.coordinates(i, k));
    return pairwise_distances(coords);
}

} // namespace

TEST_CASE("collinear points embed exactly in one dimension") {
    const auto dm = from_rows({{0, 3, 5}, {3, 0, 2}, {5, 2, 0}});
    const auto e = classical_mds(dm, 1, {"a", "b", "c"});
    const auto back = embedded_distances(e);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(back(i, j) == doctest::Approx(dm(i, j)).epsilon(1e-9));
    CHECK(e.stress == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_FALSE(e.truncated);
}

TEST_CASE("the zero matrix embeds at the origin") {
    const auto e = classical_mds(Matrix(3, 3), 1);
    for (size_t i = 0; i < 3; ++i) CHECK(e.coordinates(i, 0) == 0.0);
    CHECK(e.stress == 0.0);
}

TEST_CASE("the unit square embeds exactly in two dimensions") {
    const auto dm = pairwise_distances(
        std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto e = classical_mds(dm, 2);
    const auto back = embedded_distances(e);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(back(i, j) == doctest::Approx(dm(i, j)).epsilon(1e-9));
}

TEST_CASE("random Euclidean inputs are reproduced at sufficient dimension") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        const auto cloud = testing::random_cloud(rng, 6, 3);
        const auto dm = pairwise_distances(cloud);
        const auto e = classical_mds(dm, 3);
        const auto back = embedded_distances(e);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j)
                CHECK(std::abs(back(i, j) - dm(i, j)) < 1e-8);
    }
}

TEST_CASE("missing positive spectrum pads axes with zeros and flags it") {
    const auto dm = from_rows({{0, 3, 5}, {3, 0, 2}, {5, 2, 0}}); // rank-one geometry
    const auto e = classical_mds(dm, 2);
    CHECK(e.truncated);
    for (size_t i = 0; i < 3; ++i) CHECK(e.coordinates(i, 1) == 0.0);
    CHECK(e.eigenvalues_used[1] == 0.0);
}

TEST_CASE("negative eigenvalues never make axes") {
    // triangle-inequality violation forces a negative eigenvalue
    const auto dm = from_rows({{0, 1, 1}, {1, 0, 3}, {1, 3, 0}});
    const auto e = classical_mds(dm, 2);
    CHECK(e.truncated);
    for (double v : e.eigenvalues_used) CHECK(v >= 0.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(classical_mds(Matrix(2, 3), 1), Error);
    const auto dm = from_rows({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(classical_mds(dm, 0), Error);
    CHECK_THROWS_AS(classical_mds(dm, 2), Error); // k <= n-1
    auto bad_diag = dm;
    bad_diag(0, 0) = 0.5;
    CHECK_THROWS_AS(classical_mds(bad_diag, 1), Error);
    auto negative = dm;
    negative(0, 1) = negative(1, 0) = -1.0;
    CHECK_THROWS_AS(classical_mds(negative, 1), Error);
}

TEST_CASE("relabeling rows permutes the embedding with them") {
    testing::Rng rng(123);
    const auto cloud = testing::random_cloud(rng, 5, 2);
    const auto dm = pairwise_distances(cloud);
    const std::vector<size_t> perm{3, 0, 4, 1, 2};
    Matrix permuted(5, 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) permuted(i, j) = dm(perm[i], perm[j]);
    const auto a = classical_mds(dm, 2);
    const auto b = classical_mds(permuted, 2);
    // embedded distances agree under the same permutation
    const auto da = embedded_distances(a);
    const auto db = embedded_distances(b);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK(db(i, j) == doctest::Approx(da(perm[i], perm[j])).epsilon(1e-8));
}
