#pragma once

#include <vector>

#include "mse/errors.hpp"

namespace mse {

// Disjoint, non-empty clusters over a universe of n points; points outside
// every cluster are unclustered ("noise"). Cluster member lists are sorted
// ascending; the cluster order itself is meaningful (extraction order for
// seeds, min-id order for dendrogram cuts).
struct PartialClustering {
    int n = 0;
    std::vector<std::vector<int>> clusters;

    int covered() const;
    bool covers_all() const { return covered() == n; }
    // labels[i] = cluster index, or -1 for unclustered points
    std::vector<int> labels() const;
    void validate() const;  // throws InvalidArgument on overlap / bad ids / empty cluster
};

// Total clustering: every point carries a label in 0..k-1.
struct Clustering {
    int n = 0;
    int k = 0;
    std::vector<int> labels;

    static Clustering from_labels(std::vector<int> labels);  // relabels to contiguous 0..k-1
    static Clustering from_clusters(const PartialClustering& parts);  // must cover all points

    std::vector<std::vector<int>> clusters() const;  // sorted member lists, by label
};

// Same partition of the same universe, ignoring label naming.
bool same_partition(const Clustering& a, const Clustering& b);

// True when every cluster of `parts` is contained in some cluster of `full`
// and distinct part clusters land in distinct full clusters.
bool extends(const Clustering& full, const PartialClustering& parts);

}  // namespace mse
