#pragma once

#include <cstddef>

#include "mse/clustering.hpp"
#include "mse/dataset.hpp"

namespace mse {

struct ExpansionStats {
    std::size_t steps = 0;        // points attached
    std::size_t init_pairs = 0;   // distance evaluations in the initial scan
    std::size_t update_pairs = 0; // cache refreshes after attachments
};

// Grows the seed clusters to a full clustering. Each unattached point keeps
// the cheapest single-link reachability weight max(d(x, y), eps(x), eps(y))
// to any already-clustered y; the point with the globally smallest cached
// weight attaches next (ties to the lowest point id, then the lowest
// cluster index), and remaining caches absorb the new member. This is
// equivalent to repeatedly attaching the argmin of the chain-cost distance
// to the current clusters, because the minimax chain from an unattached
// point to a cluster is realized at its final hop.
Clustering expand_clusters(const Dataset& ds, const SparsityProfile& profile,
                           const PartialClustering& seeds, ExpansionStats* stats = nullptr);
Clustering expand_clusters(const DistanceCache& dist, const SparsityProfile& profile,
                           const PartialClustering& seeds, ExpansionStats* stats = nullptr);

}  // namespace mse
