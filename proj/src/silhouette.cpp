#include "kgpart/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kgpart/util/hash.hpp"

namespace kgpart {

double silhouette_width(const Matrix& features, const std::vector<std::uint32_t>& labels) {
    const std::size_t n = features.rows;
    if (labels.size() != n) throw std::invalid_argument("silhouette: label count mismatch");
    if (n < 3) throw std::invalid_argument("silhouette: need at least 3 points");

    std::uint32_t k = 0;
    for (auto l : labels) k = std::max(k, l + 1);
    std::vector<std::size_t> cluster_size(k, 0);
    for (auto l : labels) ++cluster_size[l];
    std::size_t populated = 0;
    for (auto c : cluster_size)
        if (c > 0) ++populated;
    if (populated < 2)
        throw std::invalid_argument("silhouette: undefined for fewer than two clusters");

    double total = 0.0;
    std::vector<double> sum_to_cluster(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(sum_to_cluster.begin(), sum_to_cluster.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double dsq = 0.0;
            const double* a = features.row(i);
            const double* b = features.row(j);
            for (std::size_t t = 0; t < features.cols; ++t) {
                const double diff = a[t] - b[t];
                dsq += diff * diff;
            }
            sum_to_cluster[labels[j]] += std::sqrt(dsq);
        }
        const std::uint32_t own = labels[i];
        if (cluster_size[own] <= 1) continue;  // singleton contributes 0
        const double a = sum_to_cluster[own] / static_cast<double>(cluster_size[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::uint32_t c = 0; c < k; ++c) {
            if (c == own || cluster_size[c] == 0) continue;
            b = std::min(b, sum_to_cluster[c] / static_cast<double>(cluster_size[c]));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

KSelection select_k(const Matrix& features, std::uint32_t k_min, std::uint32_t k_max,
                    const FcmParams& params_template) {
    const std::size_t n = features.rows;
    if (k_min < 2) throw std::invalid_argument("select_k: k_min must be >= 2");
    if (k_max < k_min) throw std::invalid_argument("select_k: empty k range");
    if (static_cast<std::size_t>(k_max) + 1 > n)
        throw std::invalid_argument("select_k: k_max must be <= n - 1");

    KSelection sel;
    for (std::uint32_t k = k_min; k <= k_max; ++k) {
        FcmParams params = params_template;
        params.k = k;
        params.seed = mix_seed(params_template.seed, k);
        FcmResult run = fcm(features, params);
        std::vector<std::uint32_t> labels = harden(run.memberships);

        std::vector<std::size_t> sizes(k, 0);
        for (auto l : labels) ++sizes[l];
        std::size_t populated = 0;
        for (auto c : sizes)
            if (c > 0) ++populated;

        const double sil =
            populated >= 2 ? silhouette_width(features, labels) : -1.0;
        sel.diagnostics.push_back({k, sil, run.objective});
        if (sel.best_k == 0 || sil > sel.best_silhouette) {
            sel.best_k = k;
            sel.best_silhouette = sil;
            sel.best_run = std::move(run);
            sel.best_labels = std::move(labels);
        }
    }
    return sel;
}

}  // namespace kgpart
