#pragma once

#include <vector>

#include "mse/dataset.hpp"

namespace mse {

// Adjusted Rand index between two labelings of the same points. Label
// values are arbitrary; only the induced partitions matter. When the
// adjustment denominator vanishes (both partitions all-singletons or both
// single-cluster) the partitions are identical and the score is 1.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

// Normalized mutual information with arithmetic-mean normalization,
// natural logarithms. If both partitions carry zero entropy the score is
// defined as 0.
double normalized_mutual_information(const std::vector<int>& a, const std::vector<int>& b);

// Calinski-Harabasz score (between-cluster dispersion over within-cluster
// dispersion, each per degree of freedom), computed with squared Euclidean
// distances to centroids in the original coordinates regardless of the
// dataset metric. Requires 2 <= k < n; a zero within-cluster dispersion
// scores +inf.
double calinski_harabasz(const Dataset& ds, const std::vector<int>& labels);

}  // namespace mse
