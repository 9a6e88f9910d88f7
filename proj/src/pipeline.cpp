#include "mse/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mse/errors.hpp"
#include "mse/metrics.hpp"

namespace mse {

MseResult mse_exact(const Dataset& ds, int n_p, int m, double d, int k) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    return mse_exact(dist, profile, m, d, k);
}

MseResult mse_exact(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                    int k) {
    MseResult out;
    MinAResult found = min_a_exact(dist, profile, m, d, k, &out.search);
    out.a = found.a;
    out.seeds = std::move(found.seeds);
    out.clustering = expand_clusters(dist, profile, out.seeds, &out.expansion);
    return out;
}

MseResult mse_overlap(const Dataset& ds, int n_p, int m, double d, int k, int expansion_n_p,
                      const LadderOptions& ladder) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    SparsityProfile expansion_profile =
        (expansion_n_p == n_p) ? profile : sparsity(dist, expansion_n_p);
    return mse_overlap(dist, profile, m, d, k, expansion_profile, ladder);
}

MseResult mse_overlap(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                      int k, const SparsityProfile& expansion_profile,
                      const LadderOptions& ladder) {
    MseResult out;
    MinAResult found =
        min_a_approx(dist, profile, m, d, k, ladder, GreedyVariant::Overlap, &out.search);
    out.a = found.a;
    out.seeds = std::move(found.seeds);
    out.clustering = expand_clusters(dist, expansion_profile, out.seeds, &out.expansion);
    return out;
}

std::vector<int> default_m_grid(int n, int k) {
    std::vector<int> grid;
    for (int i = 1; i <= 39; ++i) {
        const double delta = 0.025 * i;
        const int m = static_cast<int>(std::ceil(delta * n / k));
        if (m >= 1 && (grid.empty() || grid.back() != m)) grid.push_back(m);
    }
    if (grid.empty()) grid.push_back(1);
    return grid;
}

std::vector<double> default_d_grid() { return {1.5, 2.0, 20.0}; }

AutoSelectResult auto_select(const Dataset& ds, int n_p, int k, std::vector<int> m_grid,
                             std::vector<double> d_grid, int expansion_n_p,
                             const LadderOptions& ladder) {
    if (m_grid.empty()) m_grid = default_m_grid(ds.size(), k);
    if (d_grid.empty()) d_grid = default_d_grid();

    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    SparsityProfile expansion_profile =
        (expansion_n_p == n_p) ? profile : sparsity(dist, expansion_n_p);

    const std::size_t total = m_grid.size() * d_grid.size();
    std::vector<AutoSelectEntry> table(total);
    std::vector<MseResult> runs(total);
    std::vector<double> scores(total, -std::numeric_limits<double>::infinity());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < total; ++idx) {
        AutoSelectEntry& entry = table[idx];
        entry.m = m_grid[idx / d_grid.size()];
        entry.d = d_grid[idx % d_grid.size()];
        try {
            runs[idx] = mse_overlap(dist, profile, entry.m, entry.d, k, expansion_profile, ladder);
            entry.ok = true;
            try {
                scores[idx] = calinski_harabasz(ds, runs[idx].clustering.labels);
            } catch (const Error&) {
            }
            entry.score = scores[idx];
        } catch (const Error& e) {
            entry.ok = false;
            entry.error = e.what();
        }
    }

    std::size_t best = total;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (!table[idx].ok) continue;
        if (best == total || scores[idx] > scores[best]) best = idx;
    }
    if (best == total) {
        std::ostringstream msg;
        msg << "every grid point failed to produce " << k << " clusters;";
        std::size_t shown = 0;
        for (const AutoSelectEntry& entry : table) {
            if (shown == 5) {
                msg << " ...";
                break;
            }
            msg << " [m=" << entry.m << " d=" << entry.d << ": " << entry.error << "]";
            ++shown;
        }
        throw KUnachievable(msg.str(), -1, -1, true);
    }

    AutoSelectResult out;
    out.result = std::move(runs[best]);
    out.m = table[best].m;
    out.d = table[best].d;
    out.score = scores[best];
    out.table = std::move(table);
    return out;
}

}  // namespace mse
