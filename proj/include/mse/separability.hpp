#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "mse/clustering.hpp"
#include "mse/reachability.hpp"

namespace mse {

// Executable certificates for the three separability notions. All verdicts
// use exact floating-point comparisons by default; rel_tol loosens every
// required strict inequality a < b to a < b + rel_tol * max(|a|, |b|) for
// noisy external data.
struct SeparabilityOptions {
    double rel_tol = 0.0;
    // Default local maxima use the closed sparsity ball with non-strict
    // comparison (no strictly denser point at distance <= eps(x)). The
    // strict variant additionally demands eps(y) > eps(x) for every other
    // ball point, which prunes plateaus of tied density.
    bool strict_local_maxima = false;
};

// Weak separability: every cluster hangs together at a level strictly below
// its distance to every other cluster.
struct WeakReport {
    bool verdict = false;
    struct Witness {
        int cluster;            // first cluster violating the inequality
        double within;          // its largest internal chain cost
        double min_cross;       // the blocking cross-cluster chain cost
    };
    std::optional<Witness> witness;
    std::vector<double> within;     // per cluster
    std::vector<double> min_cross;  // per cluster, +inf for a lone cluster
};

// Local-maximum separability: every density peak sits closer (in relative
// chain cost) to the denser part of its own cluster than any densest point
// sits to a foreign cluster.
struct LmReport {
    bool verdict = false;
    double a_ell = 1.0;  // max relative cost from a peak to a no-sparser clustermate
    double rhs = 0.0;    // min relative cost from a densest point to a foreign cluster
    struct Witness {
        int x;         // the local maximum realizing a_ell
        int y;         // the clustermate it must absorb
        double value;  // = a_ell
    };
    std::optional<Witness> witness;
    std::vector<int> maxima;  // all local maxima, ascending ids
};

// Strong separability: a single inflation factor A makes the ball-grown
// cluster of every densest point exactly its own cluster. Feasible A form a
// half-open interval per densest point; the verdict needs a common point.
struct StrongReport {
    bool verdict = false;
    std::optional<double> a_star;  // smallest feasible A when verdict holds
    struct Interval {
        int cluster;
        int z;         // densest point the interval belongs to
        double lower;  // inclusive
        double upper;  // exclusive, +inf for a lone cluster
    };
    std::vector<Interval> intervals;
};

// Sufficient condition via per-cluster density spread: every cluster is
// connected at its own worst sparsity, and the worst sparsity ratio is
// beaten by every cluster's (cross distance / best sparsity) margin.
struct AlphaReport {
    bool verdict = false;
    bool connected = false;  // every cluster is (max own sparsity)-connected
    double max_alpha = 0.0;
    double min_ratio = 0.0;
};

// Density peaks: points with no strictly denser point inside their closed
// sparsity ball. Ascending ids.
std::vector<int> local_maxima(const DistanceCache& dist, const SparsityProfile& profile,
                              bool strict = false);

// Ids of minimum sparsity inside the cluster, all ties, ascending.
std::vector<int> densest_points(const SparsityProfile& profile, const std::vector<int>& cluster);

// Chain cost from x scaled by x's own sparsity. A zero sparsity yields 1
// for zero cost and +inf otherwise.
double relative_separability(const ReachabilityMST& reach, const SparsityProfile& profile, int x,
                             int y);
double relative_separability(const ReachabilityMST& reach, const SparsityProfile& profile, int x,
                             const std::vector<int>& cluster);

WeakReport check_weak(const ReachabilityMST& reach, const Clustering& clustering,
                      const SeparabilityOptions& opts = {});
LmReport check_lm(const DistanceCache& dist, const ReachabilityMST& reach,
                  const SparsityProfile& profile, const Clustering& clustering,
                  const SeparabilityOptions& opts = {});
StrongReport check_strong(const ReachabilityMST& reach, const SparsityProfile& profile,
                          const Clustering& clustering, const SeparabilityOptions& opts = {});
AlphaReport check_alpha_condition(const ReachabilityMST& reach, const SparsityProfile& profile,
                                  const Clustering& clustering,
                                  const SeparabilityOptions& opts = {});

// Dataset-level conveniences (build the distance cache and tree internally).
WeakReport check_weak(const Dataset& ds, int n_p, const Clustering& clustering,
                      const SeparabilityOptions& opts = {});
LmReport check_lm(const Dataset& ds, int n_p, const Clustering& clustering,
                  const SeparabilityOptions& opts = {});
StrongReport check_strong(const Dataset& ds, int n_p, const Clustering& clustering,
                          const SeparabilityOptions& opts = {});
AlphaReport check_alpha_condition(const Dataset& ds, int n_p, const Clustering& clustering,
                                  const SeparabilityOptions& opts = {});

// All four certificates plus the supporting sets, as one JSON document.
nlohmann::ordered_json separability_report(const Dataset& ds, int n_p,
                                           const Clustering& clustering,
                                           const SeparabilityOptions& opts = {});

}  // namespace mse
