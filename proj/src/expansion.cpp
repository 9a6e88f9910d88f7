#include "mse/expansion.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "mse/errors.hpp"
#include "mse/kernels.hpp"

namespace mse {

Clustering expand_clusters(const Dataset& ds, const SparsityProfile& profile,
                           const PartialClustering& seeds, ExpansionStats* stats) {
    DistanceCache dist(ds);
    return expand_clusters(dist, profile, seeds, stats);
}

Clustering expand_clusters(const DistanceCache& dist, const SparsityProfile& profile,
                           const PartialClustering& seeds, ExpansionStats* stats) {
    const int n = dist.size();
    if (static_cast<int>(profile.values.size()) != n) {
        throw InvalidArgument("sparsity profile size does not match dataset size");
    }
    if (seeds.n != n) {
        throw InvalidArgument("seed clustering is over a different dataset size");
    }
    seeds.validate();
    if (seeds.clusters.empty()) {
        throw InvalidArgument("expansion needs at least one seed cluster");
    }

    const std::vector<double>& eps = profile.values;
    std::vector<int> labels = seeds.labels();

    std::vector<int> pending;
    for (int i = 0; i < n; ++i) {
        if (labels[i] < 0) pending.push_back(i);
    }

    std::vector<double> best_w;
    std::vector<int> best_c;
    kernels::seed_attachment_init(dist, eps, pending, labels, best_w, best_c);

    ExpansionStats local;
    local.init_pairs = pending.size() * (static_cast<std::size_t>(n) - pending.size());

    while (!pending.empty()) {
        std::size_t pick = 0;
        for (std::size_t t = 1; t < pending.size(); ++t) {
            if (best_w[t] < best_w[pick] ||
                (best_w[t] == best_w[pick] && pending[t] < pending[pick])) {
                pick = t;
            }
        }
        const int x_star = pending[pick];
        const int c_star = best_c[pick];
        labels[x_star] = c_star;
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        best_w.erase(best_w.begin() + static_cast<std::ptrdiff_t>(pick));
        best_c.erase(best_c.begin() + static_cast<std::ptrdiff_t>(pick));
        ++local.steps;

        for (std::size_t t = 0; t < pending.size(); ++t) {
            const int x = pending[t];
            const double w = std::max(dist(x, x_star), std::max(eps[x], eps[x_star]));
            if (w < best_w[t] || (w == best_w[t] && c_star < best_c[t])) {
                best_w[t] = w;
                best_c[t] = c_star;
            }
        }
        local.update_pairs += pending.size();
    }

    if (stats) *stats = local;
    Clustering out;
    out.n = n;
    out.k = static_cast<int>(seeds.clusters.size());
    out.labels = std::move(labels);
    return out;
}

}  // namespace mse
