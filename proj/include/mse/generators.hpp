#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mse/dataset.hpp"

namespace mse {

// Counter-free splitmix64 stream. Every generator consumes this stream in
// point-id order, so outputs are identical across platforms and thread
// counts for a given seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Top 53 bits scaled into [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Box-Muller cosine branch; consumes exactly two uniforms, the sine
    // partner is discarded. Zero first-uniforms are rejected.
    double normal();
};

enum class DatasetKind { TwoCircles, TwoMoons, Blobs, Anisotropic, VariedBlobs };

DatasetKind parse_dataset_kind(const std::string& name);
std::string dataset_kind_name(DatasetKind kind);

struct GeneratedData {
    std::vector<std::vector<double>> points;
    std::vector<int> labels;
    nlohmann::ordered_json metadata;  // resolved parameters, for the sidecar file
};

// Synthetic benchmark families. noise <= 0 selects the per-kind default
// (0.05 for circles/moons; it scales the per-cluster spreads for the blob
// families, default 1.0).
GeneratedData generate_dataset(DatasetKind kind, int n, double noise, std::uint64_t seed);

Dataset to_dataset(const GeneratedData& data, Metric metric = Metric::euclidean());

}  // namespace mse
