#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include <mse/generators.hpp>
#include <mse/seeding.hpp>

namespace oracle {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<std::vector<double>> epsilon_matrix(const mse::DistanceCache& dist,
                                                const mse::SparsityProfile& profile,
                                                const std::vector<int>& universe) {
    const int n = dist.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, kInf));
    for (int x : universe) {
        m[x][x] = profile.values[x];
        for (int y : universe) {
            if (y == x) continue;
            m[x][y] = std::max({dist(x, y), profile.values[x], profile.values[y]});
        }
    }
    for (int k : universe)
        for (int i : universe)
            for (int j : universe)
                m[i][j] = std::min(m[i][j], std::max(m[i][k], m[k][j]));
    return m;
}

std::vector<std::vector<double>> epsilon_matrix(const mse::Dataset& ds, int n_p) {
    mse::DistanceCache dist(ds);
    auto profile = mse::sparsity(dist, n_p);
    std::vector<int> universe(ds.size());
    for (int i = 0; i < ds.size(); ++i) universe[i] = i;
    return epsilon_matrix(dist, profile, universe);
}

std::vector<int> threshold_component(const mse::DistanceCache& dist,
                                     const mse::SparsityProfile& profile,
                                     const std::vector<int>& universe, int x, double t) {
    if (profile.values[x] > t) return {};
    std::vector<int> nodes;
    for (int y : universe)
        if (profile.values[y] <= t) nodes.push_back(y);

    std::vector<int> comp;
    std::vector<char> seen(dist.size(), 0);
    std::queue<int> q;
    q.push(x);
    seen[x] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        comp.push_back(u);
        for (int v : nodes) {
            if (seen[v] || dist(u, v) > t) continue;
            seen[v] = 1;
            q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

mse::Clustering expand_recompute(const mse::DistanceCache& dist,
                                 const mse::SparsityProfile& profile,
                                 const mse::PartialClustering& seeds) {
    const int n = seeds.n;
    const int k = static_cast<int>(seeds.clusters.size());
    std::vector<int> labels = seeds.labels();
    const auto& eps = profile.values;

    int remaining = 0;
    for (int x = 0; x < n; ++x)
        if (labels[x] < 0) ++remaining;

    for (; remaining > 0; --remaining) {
        double best_w = kInf;
        int best_x = -1, best_c = -1;
        for (int x = 0; x < n; ++x) {
            if (labels[x] >= 0) continue;
            for (int c = 0; c < k; ++c) {
                double w = kInf;
                for (int y = 0; y < n; ++y)
                    if (labels[y] == c)
                        w = std::min(w, std::max({dist(x, y), eps[x], eps[y]}));
                if (w < best_w || (w == best_w && (x < best_x || (x == best_x && c < best_c)))) {
                    best_w = w;
                    best_x = x;
                    best_c = c;
                }
            }
        }
        labels[best_x] = best_c;
    }

    mse::Clustering out;
    out.n = n;
    out.k = k;
    out.labels = std::move(labels);
    return out;
}

std::vector<mse::Clustering> dendrogram_clusterings(const mse::Dendrogram& dendro) {
    using NodeSets = std::vector<std::vector<int>>;  // one entry per chosen node

    // A node is a real cluster when it is maximal on some interval of levels,
    // i.e. it is born strictly before its parent (the root always is).
    auto valid = [&](int v) {
        int p = dendro.parent(v);
        return p < 0 || dendro.birth(v) < dendro.birth(p);
    };

    std::function<std::vector<NodeSets>(int)> ways = [&](int v) {
        std::vector<NodeSets> out;
        if (valid(v)) out.push_back({dendro.members(v)});
        if (!dendro.is_leaf(v)) {
            std::vector<NodeSets> combos = {{}};
            for (int child : dendro.children(v)) {
                auto child_ways = ways(child);
                std::vector<NodeSets> next;
                for (const auto& left : combos)
                    for (const auto& right : child_ways) {
                        NodeSets joined = left;
                        joined.insert(joined.end(), right.begin(), right.end());
                        next.push_back(std::move(joined));
                    }
                combos = std::move(next);
            }
            out.insert(out.end(), combos.begin(), combos.end());
        }
        return out;
    };

    std::vector<mse::Clustering> result;
    for (auto& sets : ways(dendro.root())) {
        mse::PartialClustering parts;
        parts.n = dendro.size();
        parts.clusters = std::move(sets);
        std::sort(parts.clusters.begin(), parts.clusters.end());
        result.push_back(mse::Clustering::from_clusters(parts));
    }
    return result;
}

std::vector<mse::Clustering> all_partitions(int n) {
    std::vector<mse::Clustering> out;
    std::vector<int> labels(n, 0);
    std::function<void(int, int)> gen = [&](int i, int used) {
        if (i == n) {
            out.push_back(mse::Clustering::from_labels(labels));
            return;
        }
        for (int c = 0; c <= used && c < n; ++c) {
            labels[i] = c;
            gen(i + 1, std::max(used, c + 1));
        }
    };
    gen(0, 0);
    return out;
}

bool weak_from_matrix(const std::vector<std::vector<double>>& m,
                      const mse::Clustering& clustering) {
    auto clusters = clustering.clusters();
    for (const auto& c : clusters) {
        double within = 0;
        for (int x : c)
            for (int y : c) within = std::max(within, m[x][y]);
        double cross = kInf;
        for (int x : c)
            for (int y = 0; y < clustering.n; ++y)
                if (clustering.labels[y] != clustering.labels[c[0]])
                    cross = std::min(cross, m[x][y]);
        if (!(within < cross)) return false;
    }
    return true;
}

StrongSweep strong_from_matrix(const std::vector<std::vector<double>>& m,
                               const mse::SparsityProfile& profile,
                               const mse::Clustering& clustering) {
    double lo = 0, hi = kInf;
    for (const auto& c : clustering.clusters()) {
        double min_eps = kInf, within = 0, cross = kInf;
        for (int x : c) {
            min_eps = std::min(min_eps, profile.values[x]);
            for (int y : c) within = std::max(within, m[x][y]);
            for (int y = 0; y < clustering.n; ++y)
                if (clustering.labels[y] != clustering.labels[c[0]])
                    cross = std::min(cross, m[x][y]);
        }
        lo = std::max(lo, within / min_eps);
        hi = std::min(hi, cross / min_eps);
    }
    return {lo < hi, lo};
}

std::optional<double> min_a_sweep(const mse::ReachabilityMST& reach,
                                  const mse::SparsityProfile& profile,
                                  std::vector<double> candidates, int m, double d, int k) {
    std::sort(candidates.begin(), candidates.end());
    for (double a : candidates) {
        mse::SeedParams params;
        params.n_p = profile.n_p;
        params.a = a;
        params.m = m;
        params.d = d;
        auto seeds = mse::greedy_partial_clusters(reach, profile, params);
        if (static_cast<int>(seeds.clusters.size()) == k) return a;
    }
    return std::nullopt;
}

double ari_pairs(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    double n11 = 0, n00 = 0, n10 = 0, n01 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool sa = a[i] == a[j], sb = b[i] == b[j];
            if (sa && sb)
                ++n11;
            else if (!sa && !sb)
                ++n00;
            else if (sa)
                ++n10;
            else
                ++n01;
        }
    double denom = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
    if (denom == 0) return 1.0;
    return 2.0 * (n11 * n00 - n10 * n01) / denom;
}

mse::Dataset random_dataset(std::uint64_t seed, int n, int dim, double side) {
    mse::SplitMix64 rng(seed);
    std::vector<double> flat(static_cast<std::size_t>(n) * dim);
    for (auto& v : flat) v = side * rng.uniform();
    return mse::Dataset(std::move(flat), n, dim);
}

Planted planted_blobs(std::uint64_t seed, int n, int dim, int k, double spread,
                      double separation) {
    mse::SplitMix64 rng(seed);
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * dim);
    std::vector<int> labels;
    labels.reserve(n);
    for (int c = 0; c < k; ++c) {
        int count = n / k + (c < n % k ? 1 : 0);
        for (int i = 0; i < count; ++i) {
            flat.push_back(c * separation + spread * rng.normal());
            for (int t = 1; t < dim; ++t) flat.push_back(spread * rng.normal());
            labels.push_back(c);
        }
    }
    return {mse::Dataset(std::move(flat), n, dim), mse::Clustering::from_labels(labels)};
}

mse::Clustering random_labels(std::uint64_t seed, int n, int k) {
    mse::SplitMix64 rng(seed);
    std::vector<int> labels(n);
    while (true) {
        std::vector<int> seen(k, 0);
        for (auto& l : labels) {
            l = static_cast<int>(rng.next() % static_cast<std::uint64_t>(k));
            seen[l] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 1) == k) break;
    }
    return mse::Clustering::from_labels(labels);
}

}  // namespace oracle
