#include "mse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "mse/errors.hpp"

namespace mse {

namespace {

std::vector<int> compact_labels(const std::vector<int>& raw, int& k_out) {
    std::map<int, int> remap;
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = remap.try_emplace(raw[i], static_cast<int>(remap.size())).first;
        out[i] = it->second;
    }
    k_out = static_cast<int>(remap.size());
    return out;
}

double comb2(std::int64_t x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); }

}  // namespace

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidArgument("label vectors differ in length");
    if (a.size() < 2) throw InvalidArgument("adjusted Rand index needs at least 2 points");
    const std::int64_t n = static_cast<std::int64_t>(a.size());

    int ka = 0, kb = 0;
    const std::vector<int> la = compact_labels(a, ka);
    const std::vector<int> lb = compact_labels(b, kb);

    std::vector<std::int64_t> table(static_cast<std::size_t>(ka) * kb, 0);
    std::vector<std::int64_t> row(ka, 0), col(kb, 0);
    for (std::size_t i = 0; i < la.size(); ++i) {
        ++table[static_cast<std::size_t>(la[i]) * kb + lb[i]];
        ++row[la[i]];
        ++col[lb[i]];
    }

    double sum_cells = 0.0;
    for (std::int64_t c : table) sum_cells += comb2(c);
    double sum_rows = 0.0;
    for (std::int64_t c : row) sum_rows += comb2(c);
    double sum_cols = 0.0;
    for (std::int64_t c : col) sum_cols += comb2(c);

    const double total = comb2(n);
    const double expected = sum_rows * sum_cols / total;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    const double denom = maximum - expected;
    if (denom == 0.0) return 1.0;
    return (sum_cells - expected) / denom;
}

double normalized_mutual_information(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InvalidArgument("label vectors differ in length");
    if (a.empty()) throw InvalidArgument("normalized mutual information needs at least 1 point");
    const double n = static_cast<double>(a.size());

    int ka = 0, kb = 0;
    const std::vector<int> la = compact_labels(a, ka);
    const std::vector<int> lb = compact_labels(b, kb);

    std::vector<std::int64_t> table(static_cast<std::size_t>(ka) * kb, 0);
    std::vector<std::int64_t> row(ka, 0), col(kb, 0);
    for (std::size_t i = 0; i < la.size(); ++i) {
        ++table[static_cast<std::size_t>(la[i]) * kb + lb[i]];
        ++row[la[i]];
        ++col[lb[i]];
    }

    auto entropy = [&](const std::vector<std::int64_t>& counts) {
        double h = 0.0;
        for (std::int64_t c : counts) {
            if (c > 0) {
                const double p = static_cast<double>(c) / n;
                h -= p * std::log(p);
            }
        }
        return h;
    };

    double mi = 0.0;
    for (int i = 0; i < ka; ++i) {
        for (int j = 0; j < kb; ++j) {
            const std::int64_t c = table[static_cast<std::size_t>(i) * kb + j];
            if (c > 0) {
                const double pij = static_cast<double>(c) / n;
                mi += pij * std::log(n * static_cast<double>(c) /
                                     (static_cast<double>(row[i]) * static_cast<double>(col[j])));
            }
        }
    }

    const double denom = 0.5 * (entropy(row) + entropy(col));
    if (denom == 0.0) return 0.0;
    return std::clamp(mi / denom, 0.0, 1.0);
}

double calinski_harabasz(const Dataset& ds, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != ds.size()) {
        throw InvalidArgument("label vector size does not match dataset size");
    }
    int k = 0;
    const std::vector<int> compact = compact_labels(labels, k);
    const int n = ds.size();
    if (k < 2) throw InvalidArgument("Calinski-Harabasz needs at least 2 clusters");
    if (n <= k) throw InvalidArgument("Calinski-Harabasz needs more points than clusters");

    const int dim = ds.dim();
    std::vector<double> centroid(static_cast<std::size_t>(k) * dim, 0.0);
    std::vector<double> mean(dim, 0.0);
    std::vector<int> count(k, 0);
    for (int i = 0; i < n; ++i) {
        const auto p = ds.point(i);
        const int c = compact[i];
        ++count[c];
        for (int j = 0; j < dim; ++j) {
            centroid[static_cast<std::size_t>(c) * dim + j] += p[j];
            mean[j] += p[j];
        }
    }
    for (int c = 0; c < k; ++c) {
        for (int j = 0; j < dim; ++j) centroid[static_cast<std::size_t>(c) * dim + j] /= count[c];
    }
    for (int j = 0; j < dim; ++j) mean[j] /= n;

    double within = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto p = ds.point(i);
        const int c = compact[i];
        for (int j = 0; j < dim; ++j) {
            const double dxy = p[j] - centroid[static_cast<std::size_t>(c) * dim + j];
            within += dxy * dxy;
        }
    }
    double between = 0.0;
    for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (int j = 0; j < dim; ++j) {
            const double dxy = centroid[static_cast<std::size_t>(c) * dim + j] - mean[j];
            s += dxy * dxy;
        }
        between += count[c] * s;
    }

    if (within == 0.0) return std::numeric_limits<double>::infinity();
    return (between / (k - 1)) / (within / (n - k));
}

}  // namespace mse
