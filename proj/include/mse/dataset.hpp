#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mse/errors.hpp"

namespace mse {

// Distance between two points, as a pure function of their coordinate spans.
// Builtin kinds get inlined fast paths in the kernels; Custom goes through
// the std::function.
enum class MetricKind { Euclidean, SquaredEuclidean, Manhattan, Custom };

using MetricFn = std::function<double(std::span<const double>, std::span<const double>)>;

struct Metric {
    MetricKind kind = MetricKind::Euclidean;
    MetricFn fn;  // only consulted for Custom

    static Metric euclidean() { return {MetricKind::Euclidean, {}}; }
    static Metric squared_euclidean() { return {MetricKind::SquaredEuclidean, {}}; }
    static Metric manhattan() { return {MetricKind::Manhattan, {}}; }
    static Metric custom(MetricFn fn) { return {MetricKind::Custom, std::move(fn)}; }
};

// Finite point set in R^d, row-major storage, ids 0..n-1 in input order.
// Point order is stable: ids are meaningful for tie-breaking everywhere
// downstream, so the dataset never reorders rows.
class Dataset {
public:
    Dataset(std::vector<double> flat, int n, int dim, Metric metric = Metric::euclidean());

    static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                             Metric metric = Metric::euclidean());

    int size() const { return n_; }
    int dim() const { return dim_; }
    const Metric& metric() const { return metric_; }

    std::span<const double> point(int i) const {
        return {flat_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& flat() const { return flat_; }

    double distance(int i, int j) const;

private:
    std::vector<double> flat_;
    int n_;
    int dim_;
    Metric metric_;
};

// Distance lookup that materializes the full n*n matrix up to a size limit
// and falls back to on-demand evaluation above it.
class DistanceCache {
public:
    explicit DistanceCache(const Dataset& ds, int materialize_limit = 10000);

    double operator()(int i, int j) const {
        if (!full_.empty())
            return full_[static_cast<std::size_t>(i) * n_ + j];
        return ds_->distance(i, j);
    }

    bool materialized() const { return !full_.empty(); }
    int size() const { return n_; }
    const Dataset& dataset() const { return *ds_; }

private:
    const Dataset* ds_;
    int n_;
    std::vector<double> full_;
};

// Full symmetric distance matrix, row-major.
std::vector<double> pairwise_distances(const Dataset& ds);

// Sparsity profile: values[i] is the distance from point i to its
// (n_p - 1)th nearest neighbor, counting i itself as the 0th. Distance ties
// are resolved by the order statistic of the sorted distance multiset, so
// duplicated distances behave like a list, not a set. values[i] = 0 iff
// n_p == 1 or point i has a duplicate.
struct SparsityProfile {
    int n_p = 0;
    std::vector<double> values;
};

SparsityProfile sparsity(const Dataset& ds, int n_p);
SparsityProfile sparsity(const DistanceCache& dist, int n_p);

}  // namespace mse
