#include <mse/pipeline.hpp>

#include <doctest.h>

#include <mse/metrics.hpp>

#include <algorithm>
#include <limits>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("exact pipeline on the gapped line") {
    auto ds = fixtures::gapped_line();
    auto res = mse::mse_exact(ds, 3, 1, kInf, 3);

    CHECK(res.a == ds.distance(2, 3) / 2);
    CHECK(res.seeds.clusters ==
          std::vector<std::vector<int>>{{7, 8}, {11, 12}, {1, 2, 3, 4}});
    CHECK(res.clustering.labels ==
          std::vector<int>{2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 1, 1, 1, 1});
    CHECK(mse::same_partition(res.clustering,
                              mse::Clustering::from_clusters(
                                  {ds.size(), fixtures::gapped_line_runs()})));
    CHECK(res.search.candidates > 0);
    CHECK(res.expansion.steps == 6);

    CHECK_THROWS_AS(mse::mse_exact(ds, 3, 1, kInf, 5), mse::KUnachievable);
}

TEST_CASE("exact pipeline recovers planted blobs") {
    for (std::uint64_t seed : {501u, 502u, 503u}) {
        auto planted = oracle::planted_blobs(seed, 45, 2, 3, 0.3, 25.0);
        auto res = mse::mse_exact(planted.ds, 3, 3, kInf, 3);
        CHECK(mse::adjusted_rand_index(res.clustering.labels, planted.truth.labels) == 1.0);
    }
}

TEST_CASE("overlap pipeline recovers planted blobs") {
    for (std::uint64_t seed : {601u, 602u, 603u}) {
        auto planted = oracle::planted_blobs(seed, 60, 2, 3, 0.3, 25.0);
        auto res = mse::mse_overlap(planted.ds, 3, 5, kInf, 3);
        CHECK(res.clustering.k == 3);
        CHECK(mse::adjusted_rand_index(res.clustering.labels, planted.truth.labels) == 1.0);
        CHECK(res.search.candidates == 0);  // ladder search has no candidate set
    }
}

TEST_CASE("default parameter grids") {
    auto m_grid = mse::default_m_grid(300, 3);
    REQUIRE(!m_grid.empty());
    CHECK(m_grid.front() == 3);   // ceil(0.025 * 100)
    CHECK(m_grid.back() == 98);   // ceil(0.975 * 100)
    CHECK(std::is_sorted(m_grid.begin(), m_grid.end()));
    CHECK(std::adjacent_find(m_grid.begin(), m_grid.end()) == m_grid.end());

    CHECK(mse::default_m_grid(2, 5) == std::vector<int>{1});
    CHECK(mse::default_d_grid() == std::vector<double>{1.5, 2.0, 20.0});
}

TEST_CASE("grid selection with a single cell matches the direct run") {
    auto planted = oracle::planted_blobs(611, 60, 2, 3, 0.3, 25.0);
    auto direct = mse::mse_overlap(planted.ds, 3, 5, 2.0, 3);
    auto chosen = mse::auto_select(planted.ds, 3, 3, {5}, {2.0});
    CHECK(chosen.m == 5);
    CHECK(chosen.d == 2.0);
    CHECK(chosen.result.clustering.labels == direct.clustering.labels);
    CHECK(chosen.score == mse::calinski_harabasz(planted.ds, direct.clustering.labels));
    REQUIRE(chosen.table.size() == 1);
    CHECK(chosen.table[0].ok);
}

TEST_CASE("grid selection breaks score ties toward the earlier entry") {
    auto planted = oracle::planted_blobs(617, 60, 2, 3, 0.3, 25.0);
    auto chosen = mse::auto_select(planted.ds, 3, 3, {5}, {2.0, 20.0});
    REQUIRE(chosen.table.size() == 2);
    CHECK(chosen.table[0].ok);
    CHECK(chosen.table[1].ok);
    CHECK(chosen.table[0].score == chosen.table[1].score);
    CHECK(chosen.d == 2.0);
}

TEST_CASE("grid selection surfaces a full failure table") {
    auto ds = fixtures::gapped_line();
    try {
        mse::auto_select(ds, 3, 7, {8}, {1.5, 2.0});
        FAIL("expected KUnachievable");
    } catch (const mse::KUnachievable& e) {
        CHECK(e.approximate);
        CHECK(std::string(e.what()).find("m=8") != std::string::npos);
    }
}
