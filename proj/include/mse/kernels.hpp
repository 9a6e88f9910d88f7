#pragma once

#include <vector>

#include "mse/dataset.hpp"

namespace mse {

// Spanning-tree edge under reachability weights. Kept sorted by
// (weight, min(u,v), max(u,v)) wherever a list of these appears.
struct ReachEdge {
    int u;
    int v;
    double weight;
};

namespace kernels {

// The O(n^2) hot loops, OpenMP-parallel. Every kernel writes disjoint
// entries or reduces through a total order, so results are identical for
// any thread count. The mse::kernels::serial namespace holds plain-loop
// twins used by the unit tests and the benchmark tool.

// Full symmetric distance matrix, row-major, zero diagonal.
std::vector<double> distance_matrix(const Dataset& ds);

// Sparsity radius per point: the (n_p - 1)th order statistic of each
// point's distance list (the point itself being the 0th at distance 0).
std::vector<double> knn_radii(const DistanceCache& dist, int n_p);

// Minimum spanning tree of the complete graph over `universe` (point ids)
// with edge weight max(d(u,v), eps[u], eps[v]). Edge comparisons use the
// total order (weight, min id, max id), which makes the MST unique; the
// returned n-1 edges carry original point ids and are sorted by that order.
std::vector<ReachEdge> minimax_spanning_tree(const DistanceCache& dist,
                                             const std::vector<double>& eps,
                                             const std::vector<int>& universe);

// Initial nearest-cluster pass for the expansion loop: for every point of
// `points` (cluster label < 0), the smallest max(d(x,y), eps[x], eps[y])
// over clustered y, with the lowest achieving cluster label on ties.
// Fills best_w / best_c, indexed like `points`.
void seed_attachment_init(const DistanceCache& dist, const std::vector<double>& eps,
                          const std::vector<int>& points, const std::vector<int>& labels,
                          std::vector<double>& best_w, std::vector<int>& best_c);

namespace serial {
std::vector<double> distance_matrix(const Dataset& ds);
std::vector<double> knn_radii(const DistanceCache& dist, int n_p);
std::vector<ReachEdge> minimax_spanning_tree(const DistanceCache& dist,
                                             const std::vector<double>& eps,
                                             const std::vector<int>& universe);
void seed_attachment_init(const DistanceCache& dist, const std::vector<double>& eps,
                          const std::vector<int>& points, const std::vector<int>& labels,
                          std::vector<double>& best_w, std::vector<int>& best_c);
}  // namespace serial

}  // namespace kernels
}  // namespace mse
