#include "mse/reachability.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace mse {

namespace detail {
namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MergeTree build_merge_tree(const std::vector<double>& leaf_birth,
                           const std::vector<ReachEdge>& sorted_edges,
                           const std::vector<int>& id_to_local) {
    const int m = static_cast<int>(leaf_birth.size());
    MergeTree t;
    t.leaf_count = m;
    t.birth = leaf_birth;
    t.parent.assign(m, -1);
    t.children.assign(m, {});

    UnionFind uf(m);
    std::vector<int> comp_node(m);  // current top node of each component, by uf root
    std::vector<int> comp_min(m);   // smallest leaf local index in the component
    std::iota(comp_node.begin(), comp_node.end(), 0);
    std::iota(comp_min.begin(), comp_min.end(), 0);

    std::size_t i = 0;
    while (i < sorted_edges.size()) {
        std::size_t j = i;
        const double w = sorted_edges[i].weight;
        while (j < sorted_edges.size() && sorted_edges[j].weight == w)
            ++j;

        // roots involved in this level, before any of its merges
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> roots;
        std::unordered_map<int, int> slot_of_root;
        auto slot = [&](int root) {
            auto [it, inserted] = slot_of_root.try_emplace(root, static_cast<int>(roots.size()));
            if (inserted)
                roots.push_back(root);
            return it->second;
        };
        for (std::size_t e = i; e < j; ++e) {
            int ru = uf.find(id_to_local[sorted_edges[e].u]);
            int rv = uf.find(id_to_local[sorted_edges[e].v]);
            pairs.emplace_back(slot(ru), slot(rv));
        }
        std::vector<int> mini(roots.size());
        std::iota(mini.begin(), mini.end(), 0);
        auto mini_find = [&](int x) {
            while (mini[x] != x)
                x = mini[x] = mini[mini[x]];
            return x;
        };
        for (auto [a, b] : pairs)
            mini[mini_find(a)] = mini_find(b);

        // one node per connected group of components, in order of first touch
        std::vector<std::vector<int>> groups(roots.size());
        for (std::size_t s = 0; s < roots.size(); ++s)
            groups[mini_find(static_cast<int>(s))].push_back(roots[s]);
        for (std::size_t g = 0; g < groups.size(); ++g) {
            auto& members = groups[g];
            if (members.size() < 2)
                continue;
            std::sort(members.begin(), members.end(),
                      [&](int a, int b) { return comp_min[a] < comp_min[b]; });
            const int node = t.node_count();
            t.birth.push_back(w);
            t.parent.push_back(-1);
            t.children.emplace_back();
            int min_leaf = comp_min[members.front()];
            for (int r : members) {
                t.children[node].push_back(comp_node[r]);
                t.parent[comp_node[r]] = node;
                min_leaf = std::min(min_leaf, comp_min[r]);
            }
            for (std::size_t s = 1; s < members.size(); ++s)
                uf.unite(members[s], members[0]);
            const int root = uf.find(members[0]);
            comp_node[root] = node;
            comp_min[root] = min_leaf;
        }
        i = j;
    }

    t.root = comp_node[uf.find(0)];

    // leaf positions: depth-first in stored child order, so every node's
    // descendant leaves form one contiguous range
    const int nodes = t.node_count();
    t.range_lo.assign(nodes, 0);
    t.range_hi.assign(nodes, 0);
    t.leaf_seq.clear();
    t.leaf_seq.reserve(m);
    t.leaf_pos.assign(m, -1);
    std::vector<std::pair<int, int>> stack;  // (node, next child index)
    stack.emplace_back(t.root, 0);
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (t.is_leaf(node)) {
            t.range_lo[node] = static_cast<int>(t.leaf_seq.size());
            t.leaf_pos[node] = t.range_lo[node];
            t.leaf_seq.push_back(node);
            t.range_hi[node] = t.range_lo[node] + 1;
            stack.pop_back();
            continue;
        }
        if (next == 0)
            t.range_lo[node] = static_cast<int>(t.leaf_seq.size());
        if (next < static_cast<int>(t.children[node].size())) {
            int child = t.children[node][next];
            ++next;
            stack.emplace_back(child, 0);
        } else {
            t.range_hi[node] = static_cast<int>(t.leaf_seq.size());
            stack.pop_back();
        }
    }
    return t;
}

}  // namespace detail

namespace {

std::vector<int> full_universe(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace

ReachabilityMST::ReachabilityMST(const Dataset& ds, const SparsityProfile& profile)
    : ReachabilityMST(DistanceCache(ds), profile) {}

ReachabilityMST::ReachabilityMST(const DistanceCache& dist, const SparsityProfile& profile)
    : ReachabilityMST(dist, profile, full_universe(dist.size())) {}

ReachabilityMST::ReachabilityMST(const DistanceCache& dist, const SparsityProfile& profile,
                                 std::vector<int> universe)
    : n_p_(profile.n_p), universe_(std::move(universe)) {
    const int n = dist.size();
    if (profile.values.size() != static_cast<std::size_t>(n))
        throw InvalidArgument("sparsity profile size does not match dataset size");
    if (universe_.empty())
        throw InvalidArgument("universe must be non-empty");
    if (!std::is_sorted(universe_.begin(), universe_.end()) ||
        std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
        throw InvalidArgument("universe ids must be sorted and unique");
    if (universe_.front() < 0 || universe_.back() >= n)
        throw InvalidArgument("universe ids out of range");

    id_to_local_.assign(n, -1);
    for (std::size_t i = 0; i < universe_.size(); ++i)
        id_to_local_[universe_[i]] = static_cast<int>(i);

    edges_ = kernels::minimax_spanning_tree(dist, profile.values, universe_);

    std::vector<double> leaf_birth(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i)
        leaf_birth[i] = profile.values[universe_[i]];
    tree_ = detail::build_merge_tree(leaf_birth, edges_, id_to_local_);
}

bool ReachabilityMST::contains(int id) const {
    return id >= 0 && id < static_cast<int>(id_to_local_.size()) && id_to_local_[id] >= 0;
}

int ReachabilityMST::local(int id) const {
    if (!contains(id))
        throw InvalidArgument("point id " + std::to_string(id) + " is not in the universe");
    return id_to_local_[id];
}

double ReachabilityMST::epsilon_distance(int x, int y) const {
    int lx = local(x), ly = local(y);
    if (lx == ly)
        return tree_.birth[lx];
    const int pos = tree_.leaf_pos[ly];
    int node = lx;
    while (pos < tree_.range_lo[node] || pos >= tree_.range_hi[node])
        node = tree_.parent[node];
    return tree_.birth[node];
}

double ReachabilityMST::epsilon_distance(int x, const std::vector<int>& cluster) const {
    if (cluster.empty())
        throw InvalidArgument("cluster argument must be non-empty");
    int lx = local(x);
    std::vector<int> positions;
    positions.reserve(cluster.size());
    for (int id : cluster) {
        int l = local(id);
        if (l == lx)
            return tree_.birth[lx];  // x inside the cluster: cost is its own sparsity
        positions.push_back(tree_.leaf_pos[l]);
    }
    std::sort(positions.begin(), positions.end());
    int node = lx;
    while (true) {
        auto it = std::lower_bound(positions.begin(), positions.end(), tree_.range_lo[node]);
        if (it != positions.end() && *it < tree_.range_hi[node])
            return tree_.birth[node];
        node = tree_.parent[node];
    }
}

double ReachabilityMST::epsilon_distance(const std::vector<int>& a,
                                         const std::vector<int>& b) const {
    if (a.empty() || b.empty())
        throw InvalidArgument("cluster argument must be non-empty");
    double best = std::numeric_limits<double>::infinity();
    for (int x : a)
        best = std::min(best, epsilon_distance(x, b));
    return best;
}

double ReachabilityMST::cluster_sparsity(const std::vector<int>& cluster) const {
    if (cluster.empty())
        throw InvalidArgument("cluster argument must be non-empty");
    int node = local(cluster.front());
    for (std::size_t i = 1; i < cluster.size(); ++i) {
        const int pos = tree_.leaf_pos[local(cluster[i])];
        while (pos < tree_.range_lo[node] || pos >= tree_.range_hi[node])
            node = tree_.parent[node];
    }
    return tree_.birth[node];
}

std::vector<int> ReachabilityMST::epsilon_cluster_centered(int x, double eps) const {
    int node = local(x);
    if (tree_.birth[node] > eps)
        return {};
    while (tree_.parent[node] >= 0 && tree_.birth[tree_.parent[node]] <= eps)
        node = tree_.parent[node];
    std::vector<int> out;
    out.reserve(tree_.range_hi[node] - tree_.range_lo[node]);
    for (int p = tree_.range_lo[node]; p < tree_.range_hi[node]; ++p)
        out.push_back(universe_[tree_.leaf_seq[p]]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> ReachabilityMST::epsilon_row(int x) const {
    const int lx = local(x);
    std::vector<double> out(universe_.size(), 0.0);
    out[lx] = tree_.birth[lx];
    int node = lx;
    while (tree_.parent[node] >= 0) {
        const int p = tree_.parent[node];
        for (int q = tree_.range_lo[p]; q < tree_.range_lo[node]; ++q)
            out[tree_.leaf_seq[q]] = tree_.birth[p];
        for (int q = tree_.range_hi[node]; q < tree_.range_hi[p]; ++q)
            out[tree_.leaf_seq[q]] = tree_.birth[p];
        node = p;
    }
    return out;
}

}  // namespace mse
