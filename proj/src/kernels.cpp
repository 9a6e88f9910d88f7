#include "mse/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mse {
namespace kernels {
namespace {

double metric_eval(const Dataset& ds, int i, int j) {
    std::span<const double> a = ds.point(i);
    std::span<const double> b = ds.point(j);
    switch (ds.metric().kind) {
        case MetricKind::Euclidean: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                double t = a[k] - b[k];
                s += t * t;
            }
            return std::sqrt(s);
        }
        case MetricKind::SquaredEuclidean: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                double t = a[k] - b[k];
                s += t * t;
            }
            return s;
        }
        case MetricKind::Manhattan: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k)
                s += std::abs(a[k] - b[k]);
            return s;
        }
        case MetricKind::Custom:
            return ds.metric().fn(a, b);
    }
    return 0.0;
}

// Total order on candidate tree edges: (weight, min id, max id).
// Distinct edges always compare unequal, which is what makes the MST unique
// and both spanning-tree implementations below return the same edge set.
inline bool edge_less(double w1, int u1, int v1, double w2, int u2, int v2) {
    if (w1 != w2)
        return w1 < w2;
    int a1 = std::min(u1, v1), b1 = std::max(u1, v1);
    int a2 = std::min(u2, v2), b2 = std::max(u2, v2);
    if (a1 != a2)
        return a1 < a2;
    return b1 < b2;
}

inline bool reach_edge_less(const ReachEdge& e, const ReachEdge& f) {
    return edge_less(e.weight, e.u, e.v, f.weight, f.u, f.v);
}

inline double reach_weight(const DistanceCache& dist, const std::vector<double>& eps, int a,
                           int b) {
    return std::max(dist(a, b), std::max(eps[a], eps[b]));
}

}  // namespace

std::vector<double> distance_matrix(const Dataset& ds) {
    const int n = ds.size();
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = metric_eval(ds, i, j);
            out[static_cast<std::size_t>(i) * n + j] = d;
            out[static_cast<std::size_t>(j) * n + i] = d;
        }
    }
    return out;
}

std::vector<double> knn_radii(const DistanceCache& dist, int n_p) {
    const int n = dist.size();
    std::vector<double> out(n, 0.0);
    if (n_p <= 1)
        return out;
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n - 1);
        int m = 0;
        for (int j = 0; j < n; ++j)
            if (j != i)
                row[m++] = dist(i, j);
        // point i is its own 0th neighbor, so its (n_p-1)th neighbor is the
        // (n_p-2)th entry of the other-point distance list
        std::nth_element(row.begin(), row.begin() + (n_p - 2), row.end());
        out[i] = row[n_p - 2];
    }
    return out;
}

std::vector<ReachEdge> minimax_spanning_tree(const DistanceCache& dist,
                                             const std::vector<double>& eps,
                                             const std::vector<int>& universe) {
    const int m = static_cast<int>(universe.size());
    std::vector<ReachEdge> edges;
    if (m <= 1)
        return edges;
    edges.reserve(m - 1);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<char> in_tree(m, 0);
    std::vector<double> best_w(m, inf);
    std::vector<int> best_u(m, -1);  // partner as original point id

    int last = 0;  // grow from the lowest id
    in_tree[0] = 1;
    for (int step = 1; step < m; ++step) {
        const int last_id = universe[last];
        int pick = -1;
#pragma omp parallel
        {
            int local_pick = -1;
#pragma omp for nowait schedule(static)
            for (int v = 0; v < m; ++v) {
                if (in_tree[v])
                    continue;
                const int vid = universe[v];
                double w = reach_weight(dist, eps, last_id, vid);
                if (best_u[v] < 0 || edge_less(w, last_id, vid, best_w[v], best_u[v], vid)) {
                    best_w[v] = w;
                    best_u[v] = last_id;
                }
                if (local_pick < 0 ||
                    edge_less(best_w[v], best_u[v], vid, best_w[local_pick], best_u[local_pick],
                              universe[local_pick]))
                    local_pick = v;
            }
            // combining per-thread minima in any order lands on the unique
            // least edge, so the result does not depend on thread count
#pragma omp critical
            {
                if (local_pick >= 0 &&
                    (pick < 0 || edge_less(best_w[local_pick], best_u[local_pick],
                                           universe[local_pick], best_w[pick], best_u[pick],
                                           universe[pick])))
                    pick = local_pick;
            }
        }
        edges.push_back({best_u[pick], universe[pick], best_w[pick]});
        in_tree[pick] = 1;
        last = pick;
    }

    std::sort(edges.begin(), edges.end(), reach_edge_less);
    return edges;
}

void seed_attachment_init(const DistanceCache& dist, const std::vector<double>& eps,
                          const std::vector<int>& points, const std::vector<int>& labels,
                          std::vector<double>& best_w, std::vector<int>& best_c) {
    const int n = dist.size();
    const int u = static_cast<int>(points.size());
    best_w.assign(u, std::numeric_limits<double>::infinity());
    best_c.assign(u, -1);
#pragma omp parallel for schedule(dynamic, 16)
    for (int t = 0; t < u; ++t) {
        const int x = points[t];
        double bw = std::numeric_limits<double>::infinity();
        int bc = -1;
        for (int y = 0; y < n; ++y) {
            const int c = labels[y];
            if (c < 0)
                continue;
            double w = reach_weight(dist, eps, x, y);
            if (w < bw || (w == bw && (bc < 0 || c < bc))) {
                bw = w;
                bc = c;
            }
        }
        best_w[t] = bw;
        best_c[t] = bc;
    }
}

namespace serial {

std::vector<double> distance_matrix(const Dataset& ds) {
    const int n = ds.size();
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = metric_eval(ds, i, j);
            out[static_cast<std::size_t>(i) * n + j] = d;
            out[static_cast<std::size_t>(j) * n + i] = d;
        }
    }
    return out;
}

std::vector<double> knn_radii(const DistanceCache& dist, int n_p) {
    const int n = dist.size();
    std::vector<double> out(n, 0.0);
    if (n_p <= 1)
        return out;
    std::vector<double> row;
    for (int i = 0; i < n; ++i) {
        row.clear();
        for (int j = 0; j < n; ++j)
            if (j != i)
                row.push_back(dist(i, j));
        std::sort(row.begin(), row.end());
        out[i] = row[n_p - 2];
    }
    return out;
}

std::vector<ReachEdge> minimax_spanning_tree(const DistanceCache& dist,
                                             const std::vector<double>& eps,
                                             const std::vector<int>& universe) {
    const int m = static_cast<int>(universe.size());
    std::vector<ReachEdge> edges;
    if (m <= 1)
        return edges;

    std::vector<char> in_tree(m, 0);
    std::vector<double> best_w(m, 0.0);
    std::vector<int> best_u(m, -1);

    in_tree[0] = 1;
    for (int v = 1; v < m; ++v) {
        best_w[v] = reach_weight(dist, eps, universe[0], universe[v]);
        best_u[v] = universe[0];
    }
    for (int step = 1; step < m; ++step) {
        int pick = -1;
        for (int v = 0; v < m; ++v) {
            if (in_tree[v])
                continue;
            if (pick < 0 || edge_less(best_w[v], best_u[v], universe[v], best_w[pick],
                                      best_u[pick], universe[pick]))
                pick = v;
        }
        edges.push_back({best_u[pick], universe[pick], best_w[pick]});
        in_tree[pick] = 1;
        const int pid = universe[pick];
        for (int v = 0; v < m; ++v) {
            if (in_tree[v])
                continue;
            double w = reach_weight(dist, eps, pid, universe[v]);
            if (edge_less(w, pid, universe[v], best_w[v], best_u[v], universe[v])) {
                best_w[v] = w;
                best_u[v] = pid;
            }
        }
    }

    std::sort(edges.begin(), edges.end(), reach_edge_less);
    return edges;
}

void seed_attachment_init(const DistanceCache& dist, const std::vector<double>& eps,
                          const std::vector<int>& points, const std::vector<int>& labels,
                          std::vector<double>& best_w, std::vector<int>& best_c) {
    const int n = dist.size();
    const int u = static_cast<int>(points.size());
    best_w.assign(u, std::numeric_limits<double>::infinity());
    best_c.assign(u, -1);
    for (int t = 0; t < u; ++t) {
        const int x = points[t];
        for (int y = 0; y < n; ++y) {
            const int c = labels[y];
            if (c < 0)
                continue;
            double w = reach_weight(dist, eps, x, y);
            if (w < best_w[t] || (w == best_w[t] && (best_c[t] < 0 || c < best_c[t]))) {
                best_w[t] = w;
                best_c[t] = c;
            }
        }
    }
}

}  // namespace serial
}  // namespace kernels
}  // namespace mse
