#include "mse/dendrogram.hpp"

#include <algorithm>
#include <limits>

namespace mse {

Dendrogram::Dendrogram(ReachabilityMST reach) : reach_(std::move(reach)) {
    if (reach_.universe_size() != static_cast<int>(reach_.universe().back()) + 1)
        throw InvalidArgument("dendrograms are built over the full point set");
}

Dendrogram build_dendrogram(const Dataset& ds, const SparsityProfile& profile) {
    return Dendrogram(ReachabilityMST(ds, profile));
}

Dendrogram build_dendrogram(const DistanceCache& dist, const SparsityProfile& profile) {
    return Dendrogram(ReachabilityMST(dist, profile));
}

std::vector<int> Dendrogram::members(int node) const {
    const auto& t = reach_.tree();
    std::vector<int> out(t.leaf_seq.begin() + t.range_lo[node],
                         t.leaf_seq.begin() + t.range_hi[node]);
    std::sort(out.begin(), out.end());
    return out;
}

PartialClustering Dendrogram::epsilon_cut(double eps) const {
    const auto& t = reach_.tree();
    PartialClustering out;
    out.n = size();
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        if (t.birth[node] <= eps) {
            out.clusters.push_back(members(node));
        } else if (!t.is_leaf(node)) {
            for (int c : t.children[node])
                stack.push_back(c);
        }
        // leaves born after eps are noise
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::optional<PartialClustering> Dendrogram::k_cut(int k) const {
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    const auto& t = reach_.tree();
    std::vector<double> levels(t.birth);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (double eps : levels) {
        PartialClustering cut = epsilon_cut(eps);
        if (static_cast<int>(cut.clusters.size()) == k)
            return cut;
    }
    return std::nullopt;
}

nlohmann::ordered_json Dendrogram::to_json() const {
    const auto& t = reach_.tree();
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (int v = 0; v < t.node_count(); ++v) {
        nlohmann::ordered_json node;
        node["id"] = v;
        node["birth"] = t.birth[v];
        node["parent"] = t.parent[v];
        node["children"] = t.children[v];
        node["points"] = members(v);
        nodes.push_back(std::move(node));
    }
    nlohmann::ordered_json out;
    out["n"] = size();
    out["n_p"] = n_p();
    out["root"] = t.root;
    out["nodes"] = std::move(nodes);
    return out;
}

PartialClustering dbscan_from_cut(const DistanceCache& dist, const Dendrogram& dendro,
                                  double eps) {
    PartialClustering cut = dendro.epsilon_cut(eps);
    std::vector<int> labels = cut.labels();
    PartialClustering out = cut;
    for (int x = 0; x < cut.n; ++x) {
        if (labels[x] >= 0)
            continue;
        double best = std::numeric_limits<double>::infinity();
        int best_c = -1;
        for (std::size_t c = 0; c < cut.clusters.size(); ++c) {
            for (int y : cut.clusters[c]) {
                double d = dist(x, y);
                if (d < best || (d == best && static_cast<int>(c) < best_c)) {
                    best = d;
                    best_c = static_cast<int>(c);
                }
            }
        }
        if (best_c >= 0 && best <= eps)
            out.clusters[best_c].push_back(x);
    }
    for (auto& c : out.clusters)
        std::sort(c.begin(), c.end());
    return out;
}

}  // namespace mse
