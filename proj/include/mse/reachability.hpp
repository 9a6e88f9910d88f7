#pragma once

#include <vector>

#include "mse/dataset.hpp"
#include "mse/kernels.hpp"

namespace mse {

namespace detail {

// Hierarchy of connected components under ascending reachability weight.
// Leaves are points (birth = sparsity); an internal node is born at the
// weight where its children's components first join, with all merges at one
// exact weight collapsed into a single k-way node. Descendant leaves of
// every node occupy a contiguous range of leaf_seq, which makes component
// listing and minimax queries cheap.
struct MergeTree {
    int leaf_count = 0;
    int root = -1;
    std::vector<double> birth;
    std::vector<int> parent;                  // -1 at the root
    std::vector<std::vector<int>> children;   // empty for leaves
    std::vector<int> range_lo, range_hi;      // descendant leaves as [lo, hi) of leaf_seq
    std::vector<int> leaf_seq;                // leaf local index by position
    std::vector<int> leaf_pos;                // position by leaf local index

    int node_count() const { return static_cast<int>(birth.size()); }
    bool is_leaf(int v) const { return v < leaf_count; }
};

MergeTree build_merge_tree(const std::vector<double>& leaf_birth,
                           const std::vector<ReachEdge>& sorted_edges,
                           const std::vector<int>& id_to_local);

}  // namespace detail

// Minimum spanning tree of the complete graph over a point universe under
// reachability weights max(d(u,v), eps(u), eps(v)), plus the merge hierarchy
// that answers connectivity queries:
//
//   epsilon_distance(x, y)          minimax chain cost between two points
//   epsilon_cluster_centered(x, e)  all points within chain cost e of x
//   cluster_sparsity(c)             largest pairwise chain cost inside c
//
// Chains may pass through any point of the universe, not just the endpoints'
// clusters. A restricted universe (for residual reclustering) keeps original
// point ids in every query and result.
class ReachabilityMST {
public:
    ReachabilityMST(const Dataset& ds, const SparsityProfile& profile);
    ReachabilityMST(const DistanceCache& dist, const SparsityProfile& profile);
    ReachabilityMST(const DistanceCache& dist, const SparsityProfile& profile,
                    std::vector<int> universe);

    int n_p() const { return n_p_; }
    const std::vector<int>& universe() const { return universe_; }
    int universe_size() const { return static_cast<int>(universe_.size()); }
    const std::vector<ReachEdge>& edges() const { return edges_; }
    const detail::MergeTree& tree() const { return tree_; }

    bool contains(int id) const;

    double epsilon_distance(int x, int y) const;
    double epsilon_distance(int x, const std::vector<int>& cluster) const;
    double epsilon_distance(const std::vector<int>& a, const std::vector<int>& b) const;
    double cluster_sparsity(const std::vector<int>& cluster) const;

    // Sorted ids of every point whose chain cost from x is <= eps; empty
    // when eps is below x's own sparsity.
    std::vector<int> epsilon_cluster_centered(int x, double eps) const;

    // Chain cost from x to every universe point; out[i] pairs with
    // universe()[i]. Runs in O(universe size).
    std::vector<double> epsilon_row(int x) const;

private:
    int local(int id) const;  // throws InvalidArgument when id not in universe

    int n_p_ = 0;
    std::vector<int> universe_;
    std::vector<int> id_to_local_;
    std::vector<ReachEdge> edges_;
    detail::MergeTree tree_;
};

}  // namespace mse
