#pragma once

#include <vector>

#include <mse/dataset.hpp>

namespace fixtures {

inline mse::Dataset line(std::vector<double> xs) {
    const int n = static_cast<int>(xs.size());
    return mse::Dataset(std::move(xs), n, 1);
}

// Fourteen points on a line with three density regimes: a loose run spaced 2
// apart (with two gaps of 2.02), a tight run spaced 1 apart, and another
// tight run spaced 1 apart sitting 2.01 away. The interesting property is
// that the 2.01 gap between the tight runs is smaller than the 2.02 gaps
// inside the loose run, so no single distance threshold separates all three.
inline mse::Dataset gapped_line() {
    return line({1, 3, 5, 7.02, 9.02, 11.02, 17, 18, 19, 20, 22.01, 23.01, 24.01, 25.01});
}

inline const std::vector<std::vector<int>>& gapped_line_runs() {
    static const std::vector<std::vector<int>> runs = {
        {0, 1, 2, 3, 4, 5}, {6, 7, 8, 9}, {10, 11, 12, 13}};
    return runs;
}

}  // namespace fixtures
