#pragma once

#include <cstdint>
#include <vector>

#include "kgpart/fcm.hpp"
#include "kgpart/matrix.hpp"

namespace kgpart {

// Mean silhouette (b - a) / max(a, b) over all points, Euclidean distances
// between feature rows. Points in singleton clusters score 0, as does the
// a = b = 0 degenerate case. Throws std::invalid_argument when fewer than
// two clusters are populated or n < 3.
double silhouette_width(const Matrix& features, const std::vector<std::uint32_t>& labels);

struct KDiagnostic {
    std::uint32_t k = 0;
    double silhouette = 0.0;
    double objective = 0.0;
};

struct KSelection {
    std::uint32_t best_k = 0;
    double best_silhouette = 0.0;
    std::vector<KDiagnostic> diagnostics;  // one row per evaluated k
    FcmResult best_run;                    // the run that won
    std::vector<std::uint32_t> best_labels;
};

// Runs fcm + harden + silhouette for each k in [k_min, k_max] and keeps the
// best silhouette, ties to the smallest k. A k whose hardened labels leave
// fewer than two clusters populated scores -1 (recorded, never preferred).
KSelection select_k(const Matrix& features, std::uint32_t k_min, std::uint32_t k_max,
                    const FcmParams& params_template);

}  // namespace kgpart
