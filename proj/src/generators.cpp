#include "mse/generators.hpp"

#include <cmath>

#include "mse/errors.hpp"

namespace mse {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct BlobSpec {
    std::vector<std::vector<double>> centers;
    std::vector<double> stds;
};

BlobSpec blob_spec(DatasetKind kind, double spread) {
    BlobSpec spec;
    spec.centers = {{0.0, 14.0}, {-14.0, -7.0}, {14.0, -7.0}};
    if (kind == DatasetKind::VariedBlobs) {
        spec.stds = {1.0 * spread, 2.5 * spread, 0.5 * spread};
    } else {
        spec.stds = {spread, spread, spread};
    }
    return spec;
}

}  // namespace

double SplitMix64::normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

DatasetKind parse_dataset_kind(const std::string& name) {
    if (name == "two_circles" || name == "circles") return DatasetKind::TwoCircles;
    if (name == "two_moons" || name == "moons") return DatasetKind::TwoMoons;
    if (name == "blobs") return DatasetKind::Blobs;
    if (name == "anisotropic" || name == "aniso") return DatasetKind::Anisotropic;
    if (name == "varied_blobs" || name == "varied") return DatasetKind::VariedBlobs;
    throw InvalidArgument("unknown dataset kind: " + name);
}

std::string dataset_kind_name(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::TwoCircles: return "two_circles";
        case DatasetKind::TwoMoons: return "two_moons";
        case DatasetKind::Blobs: return "blobs";
        case DatasetKind::Anisotropic: return "anisotropic";
        case DatasetKind::VariedBlobs: return "varied_blobs";
    }
    throw InvalidArgument("unknown dataset kind");
}

GeneratedData generate_dataset(DatasetKind kind, int n, double noise, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("generated dataset needs n >= 1");

    GeneratedData out;
    out.points.reserve(static_cast<std::size_t>(n));
    out.labels.reserve(static_cast<std::size_t>(n));
    SplitMix64 rng(seed);

    nlohmann::ordered_json meta;
    meta["kind"] = dataset_kind_name(kind);
    meta["n"] = n;
    meta["seed"] = seed;
    meta["rng"] = "splitmix64";
    meta["normal"] = "box-muller cosine branch, two uniforms per draw";

    if (kind == DatasetKind::TwoCircles) {
        const double sigma = noise > 0.0 ? noise : 0.05;
        const double factor = 0.5;
        const int n_out = n - n / 2;
        const int n_in = n / 2;
        for (int i = 0; i < n_out; ++i) {
            const double t = 2.0 * kPi * i / n_out;
            out.points.push_back(
                {std::cos(t) + sigma * rng.normal(), std::sin(t) + sigma * rng.normal()});
            out.labels.push_back(0);
        }
        for (int i = 0; i < n_in; ++i) {
            const double t = 2.0 * kPi * i / std::max(n_in, 1);
            out.points.push_back({factor * std::cos(t) + sigma * rng.normal(),
                                  factor * std::sin(t) + sigma * rng.normal()});
            out.labels.push_back(1);
        }
        meta["noise"] = sigma;
        meta["factor"] = factor;
    } else if (kind == DatasetKind::TwoMoons) {
        const double sigma = noise > 0.0 ? noise : 0.05;
        const int n_out = n - n / 2;
        const int n_in = n / 2;
        for (int i = 0; i < n_out; ++i) {
            const double t = n_out > 1 ? kPi * i / (n_out - 1) : 0.0;
            out.points.push_back(
                {std::cos(t) + sigma * rng.normal(), std::sin(t) + sigma * rng.normal()});
            out.labels.push_back(0);
        }
        for (int i = 0; i < n_in; ++i) {
            const double t = n_in > 1 ? kPi * i / (n_in - 1) : 0.0;
            out.points.push_back({1.0 - std::cos(t) + sigma * rng.normal(),
                                  0.5 - std::sin(t) + sigma * rng.normal()});
            out.labels.push_back(1);
        }
        meta["noise"] = sigma;
    } else {
        const double spread = noise > 0.0 ? noise : 1.0;
        const BlobSpec spec = blob_spec(kind, spread);
        const int k = static_cast<int>(spec.centers.size());
        std::vector<int> sizes(k, n / k);
        for (int c = 0; c < n % k; ++c) ++sizes[c];
        for (int c = 0; c < k; ++c) {
            for (int i = 0; i < sizes[c]; ++i) {
                const double x = spec.centers[c][0] + spec.stds[c] * rng.normal();
                const double y = spec.centers[c][1] + spec.stds[c] * rng.normal();
                out.points.push_back({x, y});
                out.labels.push_back(c);
            }
        }
        meta["noise"] = spread;
        meta["centers"] = spec.centers;
        meta["stds"] = spec.stds;
        if (kind == DatasetKind::Anisotropic) {
            const double t00 = 0.6, t01 = -0.6, t10 = -0.4, t11 = 0.8;
            for (auto& p : out.points) {
                const double x = p[0], y = p[1];
                p[0] = t00 * x + t01 * y;
                p[1] = t10 * x + t11 * y;
            }
            meta["transform"] = {{t00, t01}, {t10, t11}};
        }
    }

    out.metadata = std::move(meta);
    return out;
}

Dataset to_dataset(const GeneratedData& data, Metric metric) {
    return Dataset::from_rows(data.points, std::move(metric));
}

}  // namespace mse
