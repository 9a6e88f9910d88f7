#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mse/clustering.hpp"
#include "mse/reachability.hpp"

namespace mse {

// Parameters of the greedy seed extraction: inflation factor a (>= 1),
// minimum accepted cluster size m (>= 1), and density ratio cutoff d (>= 1,
// +inf disables the cutoff).
struct SeedParams {
    int n_p = 2;
    double a = 1.0;
    int m = 1;
    double d = std::numeric_limits<double>::infinity();
};

// Greedy partial clustering: repeatedly take the unprocessed point x of
// least sparsity (ties to the lowest id), grow its chain-cost ball
// c*(x, a * eps(x)) over the full universe, and accept it when it has at
// least m points and is disjoint from everything accepted so far. Rejected
// centers are never retried; the loop stops once the candidate center is
// more than d times sparser than the first accepted center. Clusters are
// returned in extraction order.
PartialClustering greedy_partial_clusters(const Dataset& ds, const SparsityProfile& profile,
                                          const SeedParams& params);
PartialClustering greedy_partial_clusters(const ReachabilityMST& reach,
                                          const SparsityProfile& profile,
                                          const SeedParams& params);

struct OverlapOptions {
    // Recompute sparsities on the residual universe after each acceptance
    // instead of keeping the full-dataset values. Experimental, off by
    // default.
    bool recompute_sparsity = false;
};

// Variant for overlapping density regions: accepted clusters leave the
// universe, chain-cost balls are grown over what remains, and the
// disjointness test disappears (it cannot fail). Sparsities stay those of
// the full dataset unless opts.recompute_sparsity is set.
PartialClustering greedy_partial_clusters_overlap(const Dataset& ds,
                                                  const SparsityProfile& profile,
                                                  const SeedParams& params,
                                                  const OverlapOptions& opts = {});
PartialClustering greedy_partial_clusters_overlap(const DistanceCache& dist,
                                                  const SparsityProfile& profile,
                                                  const SeedParams& params,
                                                  const OverlapOptions& opts = {});

// Every inflation factor at which the greedy outcome can change: ratios
// d(y, z) / eps(x) over all point triples, filtered to >= 1, deduplicated,
// ascending. 1 is always included. Exact search cannot handle zero
// sparsities (except the trivial n = 1 universe).
std::vector<double> candidate_a_values(const Dataset& ds, const SparsityProfile& profile);
std::vector<double> candidate_a_values(const DistanceCache& dist, const SparsityProfile& profile);

struct MinAStats {
    int probes = 0;                  // greedy runs performed
    std::size_t candidates = 0;      // |S| for the exact search
};

struct MinAResult {
    double a = 1.0;
    PartialClustering seeds;
};

// Smallest candidate inflation whose greedy run yields exactly k clusters.
// The cluster count is non-increasing in a, so a binary search over the
// candidate set finds the leftmost a with count <= k; a count mismatch
// there raises KUnachievable carrying the bracketing achievable counts.
MinAResult min_a_exact(const Dataset& ds, const SparsityProfile& profile, int m, double d, int k,
                       MinAStats* stats = nullptr);
MinAResult min_a_exact(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                       int k, MinAStats* stats = nullptr);

struct LadderOptions {
    double start = 1.0;
    double growth = 1.1;
    int max_steps = 200;
};

enum class GreedyVariant { Disjoint, Overlap };

// Geometric-ladder search: probe start * growth^i until the cluster count
// crosses below k, then one bisection pass between the last two rungs.
// Returns the first parameters achieving exactly k.
MinAResult min_a_approx(const Dataset& ds, const SparsityProfile& profile, int m, double d, int k,
                        const LadderOptions& ladder = {},
                        GreedyVariant variant = GreedyVariant::Disjoint,
                        MinAStats* stats = nullptr);
MinAResult min_a_approx(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                        int k, const LadderOptions& ladder = {},
                        GreedyVariant variant = GreedyVariant::Disjoint,
                        MinAStats* stats = nullptr);

}  // namespace mse
