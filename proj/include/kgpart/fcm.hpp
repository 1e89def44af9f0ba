#pragma once

#include <cstdint>
#include <vector>

#include "kgpart/matrix.hpp"

namespace kgpart {

struct FcmParams {
    std::uint32_t k = 2;                 // cluster count, >= 2
    double fuzziness = 2.0;              // > 1
    double tolerance = 1e-6;             // on max membership change
    std::uint32_t max_iterations = 300;
    std::uint64_t seed = 0;
};

struct FcmResult {
    Matrix centers;      // k x d
    Matrix memberships;  // n x k, rows sum to 1
    double objective = 0.0;
    std::uint32_t iterations = 0;
    bool converged = false;
    // Per-iteration traces, recorded inside the loop: the weighted
    // within-cluster objective and the worst |row sum - 1|.
    std::vector<double> objective_trace;
    std::vector<double> row_sum_error_trace;
};

// Standard alternating fuzzy c-means on the rows of `features`, initialised
// with seeded random membership rows normalized to sum 1. Deterministic
// given the seed.
// Throws std::invalid_argument on n < k, bad parameters or non-finite input.
FcmResult fcm(const Matrix& features, const FcmParams& params);

// One membership update for fixed centers (exposed for the update-rule
// tests; fcm uses the same maths internally).
Matrix fcm_memberships(const Matrix& features, const Matrix& centers, double fuzziness);

// Argmax per row; ties break to the lowest cluster index.
std::vector<std::uint32_t> harden(const Matrix& memberships);

}  // namespace kgpart
