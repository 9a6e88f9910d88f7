#include "mse/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "mse/errors.hpp"

namespace mse {

namespace {

void validate_params(const SparsityProfile& profile, const SeedParams& params) {
    if (params.n_p != profile.n_p) {
        throw InvalidArgument("seed params n_p " + std::to_string(params.n_p) +
                              " does not match sparsity profile n_p " +
                              std::to_string(profile.n_p));
    }
    if (!(params.a >= 1.0)) {
        throw InvalidArgument("inflation factor a must be >= 1");
    }
    if (params.m < 1) {
        throw InvalidArgument("minimum cluster size m must be >= 1");
    }
    if (!(params.d >= 1.0)) {
        throw InvalidArgument("density ratio d must be >= 1 (inf allowed)");
    }
}

std::vector<int> sparsity_order(const std::vector<double>& eps, const std::vector<int>& ids) {
    std::vector<int> order = ids;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (eps[x] != eps[y]) return eps[x] < eps[y];
        return x < y;
    });
    return order;
}

PartialClustering greedy_impl(const ReachabilityMST& reach, const SparsityProfile& profile,
                              const SeedParams& params) {
    const int n = static_cast<int>(profile.values.size());
    PartialClustering out;
    out.n = n;

    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    const std::vector<int> order = sparsity_order(profile.values, ids);

    std::vector<char> alive(n, 1);
    std::vector<char> tried(n, 0);
    double min_extracted = std::numeric_limits<double>::infinity();
    bool have_extracted = false;
    std::size_t head = 0;

    while (true) {
        while (head < order.size() && (!alive[order[head]] || tried[order[head]])) ++head;
        if (head == order.size()) break;
        const int x = order[head];
        if (have_extracted && profile.values[x] > params.d * min_extracted) break;

        std::vector<int> cand = reach.epsilon_cluster_centered(x, params.a * profile.values[x]);
        bool ok = static_cast<int>(cand.size()) >= params.m;
        if (ok) {
            for (int id : cand) {
                if (!alive[id]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (int id : cand) alive[id] = 0;
            if (!have_extracted) {
                min_extracted = profile.values[x];
                have_extracted = true;
            }
            out.clusters.push_back(std::move(cand));
        } else {
            tried[x] = 1;
        }
    }
    return out;
}

std::vector<double> residual_sparsity(const DistanceCache& dist, const std::vector<int>& universe,
                                      int n_p, int n_total) {
    std::vector<double> eps(n_total, 0.0);
    std::vector<double> row;
    for (int x : universe) {
        row.clear();
        for (int y : universe) {
            if (y != x) row.push_back(dist(x, y));
        }
        std::nth_element(row.begin(), row.begin() + (n_p - 2), row.end());
        eps[x] = row[n_p - 2];
    }
    return eps;
}

PartialClustering overlap_impl(const DistanceCache& dist, const SparsityProfile& profile,
                               const SeedParams& params, const OverlapOptions& opts) {
    const int n = dist.size();
    PartialClustering out;
    out.n = n;

    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 0);
    std::vector<char> tried(n, 0);
    std::vector<double> eps = profile.values;
    double min_extracted = std::numeric_limits<double>::infinity();
    bool have_extracted = false;

    while (!universe.empty()) {
        if (opts.recompute_sparsity && static_cast<int>(universe.size()) < params.n_p) break;

        SparsityProfile current{params.n_p, eps};
        ReachabilityMST reach(dist, current, universe);

        std::vector<int> order = sparsity_order(eps, universe);
        bool extracted_this_round = false;
        for (std::size_t pos = 0; pos < order.size() && !extracted_this_round; ++pos) {
            const int x = order[pos];
            if (tried[x]) continue;
            if (have_extracted && eps[x] > params.d * min_extracted) return out;

            std::vector<int> cand = reach.epsilon_cluster_centered(x, params.a * eps[x]);
            if (static_cast<int>(cand.size()) >= params.m) {
                if (!have_extracted) {
                    min_extracted = eps[x];
                    have_extracted = true;
                }
                std::vector<int> next;
                next.reserve(universe.size() - cand.size());
                std::set_difference(universe.begin(), universe.end(), cand.begin(), cand.end(),
                                    std::back_inserter(next));
                universe.swap(next);
                out.clusters.push_back(std::move(cand));
                extracted_this_round = true;
            } else {
                tried[x] = 1;
            }
        }
        if (!extracted_this_round) break;
        if (opts.recompute_sparsity && !universe.empty() &&
            static_cast<int>(universe.size()) >= params.n_p) {
            eps = residual_sparsity(dist, universe, params.n_p, n);
        }
    }
    return out;
}

struct GreedyCache {
    std::map<double, PartialClustering> by_a;
    int probes = 0;
};

const PartialClustering& probe(GreedyCache& cache, const DistanceCache& dist,
                               const ReachabilityMST* shared_reach,
                               const SparsityProfile& profile, double a, int m, double d,
                               GreedyVariant variant) {
    auto it = cache.by_a.find(a);
    if (it != cache.by_a.end()) return it->second;
    SeedParams params;
    params.n_p = profile.n_p;
    params.a = a;
    params.m = m;
    params.d = d;
    ++cache.probes;
    PartialClustering result = (variant == GreedyVariant::Disjoint)
                                   ? greedy_impl(*shared_reach, profile, params)
                                   : overlap_impl(dist, profile, params, {});
    return cache.by_a.emplace(a, std::move(result)).first->second;
}

void validate_search_args(const SparsityProfile& profile, int n, int m, double d, int k) {
    if (static_cast<int>(profile.values.size()) != n) {
        throw InvalidArgument("sparsity profile size does not match dataset size");
    }
    if (m < 1) throw InvalidArgument("minimum cluster size m must be >= 1");
    if (!(d >= 1.0)) throw InvalidArgument("density ratio d must be >= 1 (inf allowed)");
    if (k < 1) throw InvalidArgument("target cluster count k must be >= 1");
}

}  // namespace

PartialClustering greedy_partial_clusters(const Dataset& ds, const SparsityProfile& profile,
                                          const SeedParams& params) {
    validate_params(profile, params);
    ReachabilityMST reach(ds, profile);
    return greedy_impl(reach, profile, params);
}

PartialClustering greedy_partial_clusters(const ReachabilityMST& reach,
                                          const SparsityProfile& profile,
                                          const SeedParams& params) {
    validate_params(profile, params);
    if (reach.universe_size() != static_cast<int>(profile.values.size())) {
        throw InvalidArgument("greedy seeding needs a reachability tree over the full dataset");
    }
    return greedy_impl(reach, profile, params);
}

PartialClustering greedy_partial_clusters_overlap(const Dataset& ds,
                                                  const SparsityProfile& profile,
                                                  const SeedParams& params,
                                                  const OverlapOptions& opts) {
    validate_params(profile, params);
    DistanceCache dist(ds);
    return overlap_impl(dist, profile, params, opts);
}

PartialClustering greedy_partial_clusters_overlap(const DistanceCache& dist,
                                                  const SparsityProfile& profile,
                                                  const SeedParams& params,
                                                  const OverlapOptions& opts) {
    validate_params(profile, params);
    if (dist.size() != static_cast<int>(profile.values.size())) {
        throw InvalidArgument("sparsity profile size does not match dataset size");
    }
    return overlap_impl(dist, profile, params, opts);
}

std::vector<double> candidate_a_values(const Dataset& ds, const SparsityProfile& profile) {
    DistanceCache dist(ds);
    return candidate_a_values(dist, profile);
}

std::vector<double> candidate_a_values(const DistanceCache& dist,
                                       const SparsityProfile& profile) {
    const int n = dist.size();
    if (static_cast<int>(profile.values.size()) != n) {
        throw InvalidArgument("sparsity profile size does not match dataset size");
    }
    if (n == 1) return {1.0};
    for (double e : profile.values) {
        if (e <= 0.0) {
            throw InvalidArgument(
                "duplicate-degenerate density: a point has zero sparsity, so inflation ratios "
                "are undefined; use approximate mode or deduplicate the input");
        }
    }
    std::vector<double> values;
    values.push_back(1.0);
    for (int x = 0; x < n; ++x) {
        const double inv = 1.0 / profile.values[x];
        for (int y = 0; y < n; ++y) {
            for (int z = y + 1; z < n; ++z) {
                const double r = dist(y, z) * inv;
                if (r >= 1.0) values.push_back(r);
            }
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

MinAResult min_a_exact(const Dataset& ds, const SparsityProfile& profile, int m, double d, int k,
                       MinAStats* stats) {
    DistanceCache dist(ds);
    return min_a_exact(dist, profile, m, d, k, stats);
}

MinAResult min_a_exact(const DistanceCache& dist, const SparsityProfile& profile, int m, double d,
                       int k, MinAStats* stats) {
    validate_search_args(profile, dist.size(), m, d, k);
    const std::vector<double> cand = candidate_a_values(dist, profile);
    ReachabilityMST reach(dist, profile);
    GreedyCache cache;

    auto count_at = [&](std::size_t idx) -> int {
        return static_cast<int>(
            probe(cache, dist, &reach, profile, cand[idx], m, d, GreedyVariant::Disjoint)
                .clusters.size());
    };

    auto fill_stats = [&]() {
        if (stats) {
            stats->probes = cache.probes;
            stats->candidates = cand.size();
        }
    };

    const int count_last = count_at(cand.size() - 1);
    if (count_last > k) {
        fill_stats();
        throw KUnachievable("no inflation factor yields " + std::to_string(k) +
                                " clusters: even the largest candidate gives " +
                                std::to_string(count_last),
                            -1, count_last, false);
    }

    std::size_t lo = 0, hi = cand.size() - 1, ans = cand.size() - 1;
    while (lo <= hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (count_at(mid) <= k) {
            ans = mid;
            if (mid == 0) break;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }

    const int count_ans = count_at(ans);
    if (count_ans != k) {
        const int above = (ans > 0) ? count_at(ans - 1) : -1;
        fill_stats();
        throw KUnachievable("no inflation factor yields exactly " + std::to_string(k) +
                                " clusters: achievable counts jump from " +
                                std::to_string(above) + " to " + std::to_string(count_ans),
                            count_ans, above, false);
    }

    MinAResult out;
    out.a = cand[ans];
    out.seeds = probe(cache, dist, &reach, profile, cand[ans], m, d, GreedyVariant::Disjoint);
    fill_stats();
    return out;
}

MinAResult min_a_approx(const Dataset& ds, const SparsityProfile& profile, int m, double d, int k,
                        const LadderOptions& ladder, GreedyVariant variant, MinAStats* stats) {
    DistanceCache dist(ds);
    return min_a_approx(dist, profile, m, d, k, ladder, variant, stats);
}

MinAResult min_a_approx(const DistanceCache& dist, const SparsityProfile& profile, int m,
                        double d, int k, const LadderOptions& ladder, GreedyVariant variant,
                        MinAStats* stats) {
    validate_search_args(profile, dist.size(), m, d, k);
    if (!(ladder.start >= 1.0)) throw InvalidArgument("ladder start must be >= 1");
    if (!(ladder.growth > 1.0)) throw InvalidArgument("ladder growth must be > 1");
    if (ladder.max_steps < 1) throw InvalidArgument("ladder max_steps must be >= 1");

    ReachabilityMST* shared = nullptr;
    std::unique_ptr<ReachabilityMST> holder;
    if (variant == GreedyVariant::Disjoint) {
        holder = std::make_unique<ReachabilityMST>(dist, profile);
        shared = holder.get();
    }
    GreedyCache cache;

    auto fill_stats = [&]() {
        if (stats) {
            stats->probes = cache.probes;
            stats->candidates = 0;
        }
    };
    auto result_at = [&](double a) -> const PartialClustering& {
        return probe(cache, dist, shared, profile, a, m, d, variant);
    };
    auto finish = [&](double a) {
        MinAResult out;
        out.a = a;
        out.seeds = result_at(a);
        fill_stats();
        return out;
    };

    double a = ladder.start;
    double prev_a = 0.0;
    int prev_count = -1;
    for (int step = 0; step < ladder.max_steps; ++step) {
        const int count = static_cast<int>(result_at(a).clusters.size());
        if (count == k) return finish(a);
        if (count < k) {
            if (step == 0) {
                fill_stats();
                throw KUnachievable("ladder start already yields " + std::to_string(count) +
                                        " clusters, fewer than the requested " +
                                        std::to_string(k),
                                    count, -1, true);
            }
            double lo = prev_a;      // count > k here
            double hi = a;           // count < k here
            int lo_count = prev_count;
            int hi_count = count;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo) || !(mid < hi)) break;
                const int c = static_cast<int>(result_at(mid).clusters.size());
                if (c == k) return finish(mid);
                if (c > k) {
                    lo = mid;
                    lo_count = c;
                } else {
                    hi = mid;
                    hi_count = c;
                }
            }
            fill_stats();
            throw KUnachievable("no probed inflation factor yields exactly " +
                                    std::to_string(k) + " clusters: counts jump from " +
                                    std::to_string(lo_count) + " to " + std::to_string(hi_count),
                                hi_count, lo_count, true);
        }
        prev_a = a;
        prev_count = count;
        a *= ladder.growth;
    }
    fill_stats();
    throw KUnachievable("ladder exhausted after " + std::to_string(ladder.max_steps) +
                            " steps without reaching " + std::to_string(k) +
                            " clusters (last count " + std::to_string(prev_count) + ")",
                        -1, prev_count, true);
}

}  // namespace mse
