#pragma once

#include <string>
#include <vector>

#include "mse/clustering.hpp"
#include "mse/expansion.hpp"
#include "mse/seeding.hpp"

namespace mse {

struct MseResult {
    Clustering clustering;       // labels follow seed extraction order
    double a = 1.0;              // selected inflation factor
    PartialClustering seeds;
    MinAStats search;
    ExpansionStats expansion;
};

// End-to-end pipeline: exact minimal-inflation search over the disjoint
// greedy, then expansion of the k seeds with the same sparsity profile.
MseResult mse_exact(const Dataset& ds, int n_p, int m, double d, int k);
MseResult mse_exact(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                    int k);

// Ladder-search pipeline over the overlap greedy. Expansion runs with its
// own sparsity profile (expansion_n_p, default 2) so that thin bridges
// between regions do not pull points across.
MseResult mse_overlap(const Dataset& ds, int n_p, int m, double d, int k, int expansion_n_p = 2,
                      const LadderOptions& ladder = {});
MseResult mse_overlap(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                      int k, const SparsityProfile& expansion_profile,
                      const LadderOptions& ladder = {});

struct AutoSelectEntry {
    int m = 0;
    double d = 0.0;
    bool ok = false;
    double score = 0.0;        // Calinski-Harabasz of the run, when scored
    std::string error;         // failure reason when !ok
};

struct AutoSelectResult {
    MseResult result;
    int m = 0;
    double d = 0.0;
    double score = 0.0;
    std::vector<AutoSelectEntry> table;  // grid order: m-major, d-minor
};

// Default grids: m = ceil(delta * n / k) for delta in 0.025..0.975 step
// 0.025 (deduplicated), d in {1.5, 2, 20}.
std::vector<int> default_m_grid(int n, int k);
std::vector<double> default_d_grid();

// Runs the overlap pipeline over a parameter grid and keeps the clustering
// with the best Calinski-Harabasz score (ties to the earliest grid entry).
// A sole surviving run wins even when its score is not computable. Throws
// KUnachievable when every grid point fails, with the failure table in the
// message.
AutoSelectResult auto_select(const Dataset& ds, int n_p, int k,
                             std::vector<int> m_grid = {}, std::vector<double> d_grid = {},
                             int expansion_n_p = 2, const LadderOptions& ladder = {});

}  // namespace mse
