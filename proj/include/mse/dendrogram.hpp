#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "mse/clustering.hpp"
#include "mse/reachability.hpp"

namespace mse {

// Cluster hierarchy of a point set: every maximal density-connected cluster
// appears as exactly one node, children merge into their parent at the
// parent's birth level, and leaf births are point sparsities. Node ids
// 0..n-1 are the leaves (equal to point ids); internal nodes follow in
// merge order, the last one being the root covering all points.
class Dendrogram {
public:
    explicit Dendrogram(ReachabilityMST reach);

    int size() const { return reach_.universe_size(); }  // number of points
    int n_p() const { return reach_.n_p(); }
    int node_count() const { return reach_.tree().node_count(); }
    int root() const { return reach_.tree().root; }
    bool is_leaf(int node) const { return reach_.tree().is_leaf(node); }
    double birth(int node) const { return reach_.tree().birth[node]; }
    int parent(int node) const { return reach_.tree().parent[node]; }
    const std::vector<int>& children(int node) const { return reach_.tree().children[node]; }
    std::vector<int> members(int node) const;  // sorted point ids

    const ReachabilityMST& reach() const { return reach_; }

    // Clusters alive at level eps: nodes with birth <= eps and no ancestor
    // with birth <= eps. Points of later birth are left unclustered.
    // Clusters are ordered by smallest member id.
    PartialClustering epsilon_cut(double eps) const;

    // The unique cut with exactly k clusters, if any level yields one.
    // Levels are scanned in ascending birth order with exact float equality.
    std::optional<PartialClustering> k_cut(int k) const;

    nlohmann::ordered_json to_json() const;

private:
    ReachabilityMST reach_;
};

Dendrogram build_dendrogram(const Dataset& ds, const SparsityProfile& profile);
Dendrogram build_dendrogram(const DistanceCache& dist, const SparsityProfile& profile);

// DBSCAN-style completion of a cut: every unclustered point x joins the cut
// cluster c minimizing min_{y in c} d(x, y) when that distance is <= eps
// (ties to the lower cluster index); points farther than eps from every
// cluster stay noise. Assignments are simultaneous, based on the original
// cut clusters.
PartialClustering dbscan_from_cut(const DistanceCache& dist, const Dendrogram& dendro,
                                  double eps);

}  // namespace mse
