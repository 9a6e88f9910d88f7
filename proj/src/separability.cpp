#include "mse/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mse/json_util.hpp"

namespace mse {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// strict a < b, loosened by the configured relative tolerance
inline bool lt(double a, double b, const SeparabilityOptions& opts) {
    if (opts.rel_tol <= 0.0)
        return a < b;
    if (std::isinf(a) || std::isinf(b))
        return a < b;
    return a < b + opts.rel_tol * std::max(std::abs(a), std::abs(b));
}

inline double ratio(double num, double den) {
    if (den > 0.0)
        return num / den;
    return num > 0.0 ? kInf : 1.0;
}

void require_total(const Clustering& clustering, int n) {
    if (clustering.n != n)
        throw InvalidArgument("clustering size does not match dataset size");
    if (clustering.k < 1)
        throw InvalidArgument("clustering must have at least one cluster");
    for (int l : clustering.labels)
        if (l < 0 || l >= clustering.k)
            throw InvalidArgument("clustering labels must be total (0..k-1)");
}

}  // namespace

std::vector<int> local_maxima(const DistanceCache& dist, const SparsityProfile& profile,
                              bool strict) {
    const int n = dist.size();
    std::vector<char> is_max(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int x = 0; x < n; ++x) {
        const double ex = profile.values[x];
        bool ok = true;
        for (int y = 0; y < n && ok; ++y) {
            if (y == x || dist(x, y) > ex)
                continue;
            if (strict ? profile.values[y] <= ex : profile.values[y] < ex)
                ok = false;
        }
        is_max[x] = ok;
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (is_max[x])
            out.push_back(x);
    return out;
}

std::vector<int> densest_points(const SparsityProfile& profile, const std::vector<int>& cluster) {
    if (cluster.empty())
        throw InvalidArgument("cluster argument must be non-empty");
    double best = kInf;
    for (int id : cluster)
        best = std::min(best, profile.values[id]);
    std::vector<int> out;
    for (int id : cluster)
        if (profile.values[id] == best)
            out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

double relative_separability(const ReachabilityMST& reach, const SparsityProfile& profile, int x,
                             int y) {
    return ratio(reach.epsilon_distance(x, y), profile.values[x]);
}

double relative_separability(const ReachabilityMST& reach, const SparsityProfile& profile, int x,
                             const std::vector<int>& cluster) {
    return ratio(reach.epsilon_distance(x, cluster), profile.values[x]);
}

WeakReport check_weak(const ReachabilityMST& reach, const Clustering& clustering,
                      const SeparabilityOptions& opts) {
    const int n = reach.universe_size();
    require_total(clustering, n);
    const int k = clustering.k;

    WeakReport report;
    report.within.assign(k, 0.0);
    report.min_cross.assign(k, kInf);

#pragma omp parallel
    {
        std::vector<double> within(k, 0.0);
        std::vector<double> cross(k, kInf);
#pragma omp for nowait schedule(dynamic, 16)
        for (int x = 0; x < n; ++x) {
            const int cx = clustering.labels[x];
            std::vector<double> row = reach.epsilon_row(x);
            for (int y = 0; y < n; ++y) {
                if (clustering.labels[y] == cx)
                    within[cx] = std::max(within[cx], row[y]);
                else
                    cross[cx] = std::min(cross[cx], row[y]);
            }
        }
#pragma omp critical
        {
            for (int c = 0; c < k; ++c) {
                report.within[c] = std::max(report.within[c], within[c]);
                report.min_cross[c] = std::min(report.min_cross[c], cross[c]);
            }
        }
    }

    report.verdict = true;
    for (int c = 0; c < k; ++c) {
        if (!lt(report.within[c], report.min_cross[c], opts)) {
            report.verdict = false;
            report.witness = WeakReport::Witness{c, report.within[c], report.min_cross[c]};
            break;
        }
    }
    return report;
}

LmReport check_lm(const DistanceCache& dist, const ReachabilityMST& reach,
                  const SparsityProfile& profile, const Clustering& clustering,
                  const SeparabilityOptions& opts) {
    const int n = reach.universe_size();
    require_total(clustering, n);
    const auto clusters = clustering.clusters();

    LmReport report;
    report.maxima = local_maxima(dist, profile, opts.strict_local_maxima);

    // a_ell: the relative cost a peak needs to absorb every clustermate at
    // most as sparse as itself (y = x always qualifies and contributes 1)
    report.a_ell = 1.0;
    for (int x : report.maxima) {
        const int cx = clustering.labels[x];
        const double ex = profile.values[x];
        std::vector<double> row = reach.epsilon_row(x);
        for (int y : clusters[cx]) {
            if (profile.values[y] > ex)
                continue;
            double a = ratio(row[y], ex);
            if (a > report.a_ell) {
                report.a_ell = a;
                report.witness = LmReport::Witness{x, y, a};
            }
        }
    }

    // rhs: how far, relatively, each cluster's densest points sit from every
    // other cluster
    report.rhs = kInf;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (int z : densest_points(profile, clusters[c])) {
            std::vector<double> row = reach.epsilon_row(z);
            const double ez = profile.values[z];
            for (std::size_t c2 = 0; c2 < clusters.size(); ++c2) {
                if (c2 == c)
                    continue;
                double best = kInf;
                for (int w : clusters[c2])
                    best = std::min(best, row[w]);
                report.rhs = std::min(report.rhs, ratio(best, ez));
            }
        }
    }

    report.verdict = lt(report.a_ell, report.rhs, opts);
    return report;
}

StrongReport check_strong(const ReachabilityMST& reach, const SparsityProfile& profile,
                          const Clustering& clustering, const SeparabilityOptions& opts) {
    const int n = reach.universe_size();
    require_total(clustering, n);
    const auto clusters = clustering.clusters();

    StrongReport report;
    double lo = 1.0;  // A is at least 1 by definition
    double hi = kInf;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (int z : densest_points(profile, clusters[c])) {
            const double ez = profile.values[z];
            std::vector<double> row = reach.epsilon_row(z);
            double lower = 0.0;
            double upper = kInf;
            for (int y = 0; y < n; ++y) {
                if (clustering.labels[y] == static_cast<int>(c))
                    lower = std::max(lower, ratio(row[y], ez));
                else
                    upper = std::min(upper, ratio(row[y], ez));
            }
            lower = std::max(lower, 1.0);
            report.intervals.push_back({static_cast<int>(c), z, lower, upper});
            lo = std::max(lo, lower);
            hi = std::min(hi, upper);
        }
    }
    report.verdict = lt(lo, hi, opts);
    if (report.verdict)
        report.a_star = lo;
    return report;
}

AlphaReport check_alpha_condition(const ReachabilityMST& reach, const SparsityProfile& profile,
                                  const Clustering& clustering, const SeparabilityOptions& opts) {
    const int n = reach.universe_size();
    require_total(clustering, n);
    const auto clusters = clustering.clusters();

    AlphaReport report;
    report.connected = true;
    report.max_alpha = 0.0;
    report.min_ratio = kInf;

    WeakReport cross = check_weak(reach, clustering, opts);  // reuse its per-cluster minima
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        double min_eps = kInf, max_eps = 0.0;
        for (int id : clusters[c]) {
            min_eps = std::min(min_eps, profile.values[id]);
            max_eps = std::max(max_eps, profile.values[id]);
        }
        if (reach.cluster_sparsity(clusters[c]) > max_eps)
            report.connected = false;
        report.max_alpha = std::max(report.max_alpha, ratio(max_eps, min_eps));
        report.min_ratio = std::min(report.min_ratio, ratio(cross.min_cross[c], min_eps));
    }
    report.verdict = report.connected && lt(report.max_alpha, report.min_ratio, opts);
    return report;
}

WeakReport check_weak(const Dataset& ds, int n_p, const Clustering& clustering,
                      const SeparabilityOptions& opts) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    return check_weak(ReachabilityMST(dist, profile), clustering, opts);
}

LmReport check_lm(const Dataset& ds, int n_p, const Clustering& clustering,
                  const SeparabilityOptions& opts) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    return check_lm(dist, ReachabilityMST(dist, profile), profile, clustering, opts);
}

StrongReport check_strong(const Dataset& ds, int n_p, const Clustering& clustering,
                          const SeparabilityOptions& opts) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    return check_strong(ReachabilityMST(dist, profile), profile, clustering, opts);
}

AlphaReport check_alpha_condition(const Dataset& ds, int n_p, const Clustering& clustering,
                                  const SeparabilityOptions& opts) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    return check_alpha_condition(ReachabilityMST(dist, profile), profile, clustering, opts);
}

nlohmann::ordered_json separability_report(const Dataset& ds, int n_p,
                                           const Clustering& clustering,
                                           const SeparabilityOptions& opts) {
    DistanceCache dist(ds);
    SparsityProfile profile = sparsity(dist, n_p);
    ReachabilityMST reach(dist, profile);

    WeakReport weak = check_weak(reach, clustering, opts);
    LmReport lm = check_lm(dist, reach, profile, clustering, opts);
    StrongReport strong = check_strong(reach, profile, clustering, opts);
    AlphaReport alpha = check_alpha_condition(reach, profile, clustering, opts);

    nlohmann::ordered_json j;
    j["n"] = clustering.n;
    j["k"] = clustering.k;
    j["n_p"] = n_p;

    nlohmann::ordered_json jweak;
    jweak["verdict"] = weak.verdict;
    jweak["within"] = nlohmann::ordered_json::array();
    jweak["min_cross"] = nlohmann::ordered_json::array();
    for (int c = 0; c < clustering.k; ++c) {
        jweak["within"].push_back(json_real(weak.within[c]));
        jweak["min_cross"].push_back(json_real(weak.min_cross[c]));
    }
    if (weak.witness) {
        jweak["witness"] = {{"cluster", weak.witness->cluster},
                            {"within", json_real(weak.witness->within)},
                            {"min_cross", json_real(weak.witness->min_cross)}};
    } else {
        jweak["witness"] = nullptr;
    }
    j["weak"] = std::move(jweak);

    nlohmann::ordered_json jlm;
    jlm["verdict"] = lm.verdict;
    jlm["a_ell"] = json_real(lm.a_ell);
    jlm["rhs"] = json_real(lm.rhs);
    if (lm.witness) {
        jlm["witness"] = {{"x", lm.witness->x},
                          {"y", lm.witness->y},
                          {"value", json_real(lm.witness->value)}};
    } else {
        jlm["witness"] = nullptr;
    }
    j["lm"] = std::move(jlm);

    nlohmann::ordered_json jstrong;
    jstrong["verdict"] = strong.verdict;
    jstrong["a_star"] = strong.a_star ? json_real(*strong.a_star) : nlohmann::ordered_json(nullptr);
    jstrong["intervals"] = nlohmann::ordered_json::array();
    for (const auto& iv : strong.intervals) {
        jstrong["intervals"].push_back({{"cluster", iv.cluster},
                                        {"z", iv.z},
                                        {"lower", json_real(iv.lower)},
                                        {"upper", json_real(iv.upper)}});
    }
    j["strong"] = std::move(jstrong);

    j["alpha"] = alpha.verdict;
    j["local_maxima"] = lm.maxima;

    nlohmann::ordered_json jdensest = nlohmann::ordered_json::array();
    for (const auto& cluster : clustering.clusters())
        jdensest.push_back(densest_points(profile, cluster));
    j["densest"] = std::move(jdensest);
    return j;
}

}  // namespace mse
