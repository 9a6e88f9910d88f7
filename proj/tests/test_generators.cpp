#include <mse/generators.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

using mse::DatasetKind;
using mse::GeneratedData;
using mse::SplitMix64;

TEST_CASE("splitmix64 stream is reproducible and bounded") {
    SplitMix64 a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    bool diverged = false;
    SplitMix64 a2(42);
    for (int i = 0; i < 100; ++i) diverged |= (a2.next() != c.next());
    CHECK(diverged);
}

TEST_CASE("normal draws consume exactly two uniforms") {
    SplitMix64 a(7), b(7);
    (void)a.normal();
    (void)b.uniform();
    (void)b.uniform();
    CHECK(a.next() == b.next());
}

TEST_CASE("kind names round-trip and accept aliases") {
    for (auto kind : {DatasetKind::TwoCircles, DatasetKind::TwoMoons, DatasetKind::Blobs,
                      DatasetKind::Anisotropic, DatasetKind::VariedBlobs}) {
        CHECK(mse::parse_dataset_kind(mse::dataset_kind_name(kind)) == kind);
    }
    CHECK(mse::parse_dataset_kind("circles") == DatasetKind::TwoCircles);
    CHECK(mse::parse_dataset_kind("moons") == DatasetKind::TwoMoons);
    CHECK(mse::parse_dataset_kind("aniso") == DatasetKind::Anisotropic);
    CHECK(mse::parse_dataset_kind("varied") == DatasetKind::VariedBlobs);
    CHECK_THROWS_AS(mse::parse_dataset_kind("spirals"), mse::InvalidArgument);
}

TEST_CASE("generation is deterministic in the seed") {
    for (auto kind : {DatasetKind::TwoCircles, DatasetKind::TwoMoons, DatasetKind::Blobs,
                      DatasetKind::Anisotropic, DatasetKind::VariedBlobs}) {
        auto a = mse::generate_dataset(kind, 120, -1.0, 9001);
        auto b = mse::generate_dataset(kind, 120, -1.0, 9001);
        CHECK(a.points == b.points);
        CHECK(a.labels == b.labels);
        auto c = mse::generate_dataset(kind, 120, -1.0, 9002);
        CHECK(a.points != c.points);
    }
}

TEST_CASE("ring and moon labellings split the points in half") {
    auto circles = mse::generate_dataset(DatasetKind::TwoCircles, 500, 0.05, 7);
    REQUIRE(circles.points.size() == 500);
    int ones = 0;
    for (int l : circles.labels) ones += (l == 1);
    CHECK(ones == 250);
    CHECK(circles.labels.front() == 0);
    CHECK(circles.labels.back() == 1);

    auto tiny = mse::generate_dataset(DatasetKind::TwoCircles, 4, 0.05, 7);
    CHECK(tiny.labels == std::vector<int>{0, 0, 1, 1});

    auto moons = mse::generate_dataset(DatasetKind::TwoMoons, 501, 0.05, 7);
    int zeros = 0;
    for (int l : moons.labels) zeros += (l == 0);
    CHECK(zeros == 251);  // the outer arc takes the odd point
}

TEST_CASE("blob families balance sizes with the remainder up front") {
    auto blobs = mse::generate_dataset(DatasetKind::Blobs, 500, -1.0, 11);
    std::vector<int> sizes(3, 0);
    for (int l : blobs.labels) ++sizes[l];
    CHECK(sizes == std::vector<int>{167, 167, 166});

    auto varied = mse::generate_dataset(DatasetKind::VariedBlobs, 500, -1.0, 11);
    CHECK(varied.metadata["stds"] == std::vector<double>{1.0, 2.5, 0.5});
}

TEST_CASE("anisotropic blobs record their shear") {
    auto aniso = mse::generate_dataset(DatasetKind::Anisotropic, 90, -1.0, 3);
    CHECK(aniso.metadata.contains("transform"));
    // Same seed without the shear, then apply it by hand.
    auto plain = mse::generate_dataset(DatasetKind::Blobs, 90, -1.0, 3);
    const auto& t = aniso.metadata["transform"];
    const double t00 = t[0][0], t01 = t[0][1], t10 = t[1][0], t11 = t[1][1];
    for (std::size_t i = 0; i < plain.points.size(); ++i) {
        const double x = plain.points[i][0], y = plain.points[i][1];
        CHECK(aniso.points[i][0] == t00 * x + t01 * y);
        CHECK(aniso.points[i][1] == t10 * x + t11 * y);
    }
}

TEST_CASE("generator metadata names the resolved parameters") {
    auto data = mse::generate_dataset(DatasetKind::TwoMoons, 40, -1.0, 123);
    CHECK(data.metadata["kind"] == "two_moons");
    CHECK(data.metadata["n"] == 40);
    CHECK(data.metadata["seed"] == 123);
    CHECK(data.metadata["rng"] == "splitmix64");
    CHECK(data.metadata["noise"] == 0.05);

    CHECK_THROWS_AS(mse::generate_dataset(DatasetKind::Blobs, 0, -1.0, 1), mse::InvalidArgument);
}

TEST_CASE("generated data converts to a dataset") {
    auto data = mse::generate_dataset(DatasetKind::Blobs, 30, -1.0, 5);
    auto ds = mse::to_dataset(data);
    CHECK(ds.size() == 30);
    CHECK(ds.dim() == 2);
    const double dx = data.points[0][0] - data.points[1][0];
    const double dy = data.points[0][1] - data.points[1][1];
    CHECK(ds.distance(0, 1) == std::sqrt(dx * dx + dy * dy));
}
