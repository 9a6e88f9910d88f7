#include "mse/clustering.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mse {

int PartialClustering::covered() const {
    int total = 0;
    for (const auto& c : clusters)
        total += static_cast<int>(c.size());
    return total;
}

std::vector<int> PartialClustering::labels() const {
    std::vector<int> out(n, -1);
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (int id : clusters[c])
            out[id] = static_cast<int>(c);
    return out;
}

void PartialClustering::validate() const {
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (clusters[c].empty())
            throw InvalidArgument("cluster " + std::to_string(c) + " is empty");
        for (int id : clusters[c]) {
            if (id < 0 || id >= n)
                throw InvalidArgument("point id " + std::to_string(id) + " out of range");
            if (seen[id])
                throw InvalidArgument("point " + std::to_string(id) +
                                      " appears in more than one cluster");
            seen[id] = 1;
        }
    }
}

Clustering Clustering::from_labels(std::vector<int> labels) {
    Clustering out;
    out.n = static_cast<int>(labels.size());
    std::map<int, int> relabel;
    for (int& l : labels) {
        auto [it, inserted] = relabel.try_emplace(l, static_cast<int>(relabel.size()));
        l = it->second;
        (void)inserted;
    }
    out.k = static_cast<int>(relabel.size());
    out.labels = std::move(labels);
    return out;
}

Clustering Clustering::from_clusters(const PartialClustering& parts) {
    parts.validate();
    if (!parts.covers_all())
        throw InvalidArgument("clusters cover " + std::to_string(parts.covered()) + " of " +
                              std::to_string(parts.n) + " points; a total clustering is required");
    Clustering out;
    out.n = parts.n;
    out.k = static_cast<int>(parts.clusters.size());
    out.labels = parts.labels();
    return out;
}

std::vector<std::vector<int>> Clustering::clusters() const {
    std::vector<std::vector<int>> out(k);
    for (int i = 0; i < n; ++i)
        out[labels[i]].push_back(i);
    return out;
}

bool same_partition(const Clustering& a, const Clustering& b) {
    if (a.n != b.n || a.k != b.k)
        return false;
    std::vector<int> a_to_b(a.k, -1);
    std::vector<int> b_to_a(b.k, -1);
    for (int i = 0; i < a.n; ++i) {
        int la = a.labels[i], lb = b.labels[i];
        if (a_to_b[la] < 0 && b_to_a[lb] < 0) {
            a_to_b[la] = lb;
            b_to_a[lb] = la;
        } else if (a_to_b[la] != lb || b_to_a[lb] != la) {
            return false;
        }
    }
    return true;
}

bool extends(const Clustering& full, const PartialClustering& parts) {
    if (full.n != parts.n)
        return false;
    std::vector<char> used(full.k, 0);
    for (const auto& part : parts.clusters) {
        if (part.empty())
            return false;
        int label = full.labels[part.front()];
        for (int id : part)
            if (full.labels[id] != label)
                return false;
        if (used[label])
            return false;  // two part clusters inside one full cluster
        used[label] = 1;
    }
    return true;
}

}  // namespace mse
