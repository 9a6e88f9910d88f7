#include "mse/dataset.hpp"

#include <cmath>

#include "mse/kernels.hpp"

namespace mse {

Dataset::Dataset(std::vector<double> flat, int n, int dim, Metric metric)
    : flat_(std::move(flat)), n_(n), dim_(dim), metric_(std::move(metric)) {
    if (n_ < 1)
        throw InvalidDataset("dataset must contain at least one point");
    if (dim_ < 1)
        throw InvalidDataset("point dimension must be at least 1");
    if (flat_.size() != static_cast<std::size_t>(n_) * dim_)
        throw InvalidDataset("flat buffer size does not match n * dim");
    if (metric_.kind == MetricKind::Custom && !metric_.fn)
        throw InvalidArgument("custom metric requires a callable");
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows, Metric metric) {
    if (rows.empty())
        throw InvalidDataset("dataset must contain at least one point");
    const std::size_t dim = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim)
            throw InvalidDataset("row " + std::to_string(i) + " has dimension " +
                                 std::to_string(rows[i].size()) + ", expected " +
                                 std::to_string(dim));
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return Dataset(std::move(flat), static_cast<int>(rows.size()), static_cast<int>(dim),
                   std::move(metric));
}

double Dataset::distance(int i, int j) const {
    if (i == j)
        return 0.0;
    std::span<const double> a = point(i);
    std::span<const double> b = point(j);
    switch (metric_.kind) {
        case MetricKind::Euclidean: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                double t = a[k] - b[k];
                s += t * t;
            }
            return std::sqrt(s);
        }
        case MetricKind::SquaredEuclidean: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                double t = a[k] - b[k];
                s += t * t;
            }
            return s;
        }
        case MetricKind::Manhattan: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k)
                s += std::abs(a[k] - b[k]);
            return s;
        }
        case MetricKind::Custom:
            return metric_.fn(a, b);
    }
    return 0.0;
}

DistanceCache::DistanceCache(const Dataset& ds, int materialize_limit) : ds_(&ds), n_(ds.size()) {
    if (n_ <= materialize_limit)
        full_ = kernels::distance_matrix(ds);
}

std::vector<double> pairwise_distances(const Dataset& ds) {
    return kernels::distance_matrix(ds);
}

SparsityProfile sparsity(const Dataset& ds, int n_p) {
    return sparsity(DistanceCache(ds), n_p);
}

SparsityProfile sparsity(const DistanceCache& dist, int n_p) {
    const int n = dist.size();
    if (n_p < 1 || n_p > n)
        throw InvalidArgument("n_p must satisfy 1 <= n_p <= n (got n_p=" + std::to_string(n_p) +
                              ", n=" + std::to_string(n) + ")");
    SparsityProfile profile;
    profile.n_p = n_p;
    profile.values = kernels::knn_radii(dist, n_p);
    return profile;
}

}  // namespace mse
