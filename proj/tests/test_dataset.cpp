#include <mse/dataset.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

using mse::Dataset;
using mse::DistanceCache;
using mse::Metric;

TEST_CASE("distances on tiny datasets") {
    auto two = fixtures::line({0, 3});
    CHECK(two.distance(0, 1) == 3);
    CHECK(two.distance(1, 0) == 3);
    CHECK(two.distance(0, 0) == 0);

    auto one = fixtures::line({42});
    CHECK(one.size() == 1);
    CHECK(one.distance(0, 0) == 0);

    Dataset triangle({0, 0, 3, 4}, 2, 2);
    CHECK(triangle.distance(0, 1) == 5);
}

TEST_CASE("metric variants") {
    Dataset base({1, 2, 4, 6}, 2, 2);
    CHECK(base.distance(0, 1) == 5);

    Dataset sq({1, 2, 4, 6}, 2, 2, Metric::squared_euclidean());
    CHECK(sq.distance(0, 1) == 25);

    Dataset man({1, 2, 4, 6}, 2, 2, Metric::manhattan());
    CHECK(man.distance(0, 1) == 7);

    Dataset max_metric({1, 2, 4, 6}, 2, 2,
                       Metric::custom([](std::span<const double> a, std::span<const double> b) {
                           double best = 0;
                           for (std::size_t i = 0; i < a.size(); ++i)
                               best = std::max(best, std::abs(a[i] - b[i]));
                           return best;
                       }));
    CHECK(max_metric.distance(0, 1) == 4);
}

TEST_CASE("dataset validation") {
    CHECK_THROWS_AS(Dataset({}, 0, 1), mse::InvalidDataset);
    CHECK_THROWS_AS(Dataset({1, 2, 3}, 2, 2), mse::InvalidDataset);
    CHECK_THROWS_AS(Dataset::from_rows({{1, 2}, {3}}), mse::InvalidDataset);
    CHECK_THROWS_AS(Dataset({1}, 1, 1, Metric::custom(nullptr)), mse::InvalidArgument);
}

TEST_CASE("sparsity on small lines") {
    auto even = fixtures::line({1, 3, 5});
    auto prof = mse::sparsity(even, 2);
    CHECK(prof.values == std::vector<double>{2, 2, 2});

    auto zeros = mse::sparsity(even, 1);
    CHECK(zeros.values == std::vector<double>{0, 0, 0});

    // Mixed spacing; values checked against a hand count of nearest
    // neighbors. Point order is 7, 8, 10, 13, 21, 17, 25, 27.
    auto mixed = fixtures::line({7, 8, 10, 13, 21, 17, 25, 27});
    auto m2 = mse::sparsity(mixed, 2);
    CHECK(m2.values == std::vector<double>{1, 1, 2, 3, 4, 4, 2, 2});
}

TEST_CASE("sparsity handles duplicates and range errors") {
    auto dup = fixtures::line({0, 0, 5});
    CHECK(mse::sparsity(dup, 2).values == std::vector<double>{0, 0, 5});
    CHECK(mse::sparsity(dup, 3).values == std::vector<double>{5, 5, 5});

    CHECK_THROWS_AS(mse::sparsity(dup, 0), mse::InvalidArgument);
    CHECK_THROWS_AS(mse::sparsity(dup, 4), mse::InvalidArgument);
}

TEST_CASE("sparsity is a neighbor-count threshold and grows with n_p") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto ds = oracle::random_dataset(seed, 40, 2);
        std::vector<double> prev;
        for (int n_p = 1; n_p <= 6; ++n_p) {
            auto prof = mse::sparsity(ds, n_p);
            for (int x = 0; x < ds.size(); ++x) {
                int at_radius = 0, inside = 0;
                for (int y = 0; y < ds.size(); ++y) {
                    if (ds.distance(x, y) <= prof.values[x]) ++at_radius;
                    if (ds.distance(x, y) < prof.values[x]) ++inside;
                }
                CHECK(at_radius >= n_p);
                CHECK(inside < n_p);
            }
            if (!prev.empty())
                for (int x = 0; x < ds.size(); ++x) CHECK(prev[x] <= prof.values[x]);
            prev = prof.values;
        }
    }
}

TEST_CASE("distance cache agrees with direct evaluation") {
    auto ds = oracle::random_dataset(9, 25, 3);
    DistanceCache big(ds);          // under the limit, materialized
    DistanceCache small(ds, 10);    // over the limit, computed on demand
    CHECK(big.materialized());
    CHECK(!small.materialized());
    for (int i = 0; i < ds.size(); ++i)
        for (int j = 0; j < ds.size(); ++j) {
            CHECK(big(i, j) == ds.distance(i, j));
            CHECK(small(i, j) == ds.distance(i, j));
        }
}

TEST_CASE("metric symmetry and zero diagonal on random data") {
    auto ds = oracle::random_dataset(11, 30, 2);
    for (int i = 0; i < ds.size(); ++i) {
        CHECK(ds.distance(i, i) == 0);
        for (int j = i + 1; j < ds.size(); ++j)
            CHECK(ds.distance(i, j) == ds.distance(j, i));
    }
}
