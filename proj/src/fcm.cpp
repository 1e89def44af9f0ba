#include "kgpart/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kgpart/util/hash.hpp"

namespace kgpart {

namespace {

// Compensated accumulator; keeps center/objective sums insensitive to the
// row order, which the permutation-invariance contract relies on.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double squared_distance(const double* a, const double* b, std::size_t d) {
    KahanSum acc;
    for (std::size_t j = 0; j < d; ++j) {
        const double diff = a[j] - b[j];
        acc.add(diff * diff);
    }
    return acc.sum;
}

void validate(const Matrix& features, const FcmParams& params) {
    if (params.k < 2) throw std::invalid_argument("fcm: k must be >= 2");
    if (features.rows < params.k)
        throw std::invalid_argument("fcm: need at least k points, got " +
                                    std::to_string(features.rows));
    if (features.cols < 1) throw std::invalid_argument("fcm: empty feature vectors");
    if (!(params.fuzziness > 1.0)) throw std::invalid_argument("fcm: fuzziness must be > 1");
    if (!(params.tolerance > 0.0)) throw std::invalid_argument("fcm: tolerance must be > 0");
    if (params.max_iterations == 0)
        throw std::invalid_argument("fcm: max_iterations must be positive");
    for (double v : features.data)
        if (!std::isfinite(v)) throw std::invalid_argument("fcm: non-finite feature value");
}

// Seeded random membership rows, normalized to sum 1.
Matrix initial_memberships(std::size_t n, std::uint32_t k, std::uint64_t seed) {
    Matrix u(n, k, 0.0);
    SplitMix64 gen(splitmix64(seed));
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::uint32_t c = 0; c < k; ++c) {
            const double v = gen.next_double() + 1e-12;
            u.at(i, c) = v;
            sum += v;
        }
        for (std::uint32_t c = 0; c < k; ++c) u.at(i, c) /= sum;
    }
    return u;
}

void update_membership_row(const double* dsq, std::uint32_t k, double exponent, double* out) {
    std::uint32_t zeros = 0;
    for (std::uint32_t c = 0; c < k; ++c)
        if (dsq[c] == 0.0) ++zeros;
    if (zeros > 0) {
        for (std::uint32_t c = 0; c < k; ++c)
            out[c] = dsq[c] == 0.0 ? 1.0 / static_cast<double>(zeros) : 0.0;
        return;
    }
    for (std::uint32_t c = 0; c < k; ++c) {
        double sum = 0.0;
        for (std::uint32_t o = 0; o < k; ++o) sum += std::pow(dsq[c] / dsq[o], exponent);
        out[c] = 1.0 / sum;
    }
}

}  // namespace

Matrix fcm_memberships(const Matrix& features, const Matrix& centers, double fuzziness) {
    const std::size_t n = features.rows;
    const std::uint32_t k = static_cast<std::uint32_t>(centers.rows);
    const double exponent = 1.0 / (fuzziness - 1.0);
    Matrix u(n, k, 0.0);
    std::vector<double> dsq(k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t c = 0; c < k; ++c)
            dsq[c] = squared_distance(features.row(i), centers.row(c), features.cols);
        update_membership_row(dsq.data(), k, exponent, u.row(i));
    }
    return u;
}

FcmResult fcm(const Matrix& features, const FcmParams& params) {
    validate(features, params);
    const std::size_t n = features.rows;
    const std::size_t d = features.cols;
    const std::uint32_t k = params.k;
    const double exponent = 1.0 / (params.fuzziness - 1.0);

    FcmResult result;
    result.memberships = initial_memberships(n, k, params.seed);
    result.centers = Matrix(k, d, 0.0);

    Matrix dsq(n, k, 0.0);
    std::vector<KahanSum> num(d);
    std::vector<double> weights(n);

    for (std::uint32_t iter = 1; iter <= params.max_iterations; ++iter) {
        // centers from the fuzzified memberships
        for (std::uint32_t c = 0; c < k; ++c) {
            KahanSum denom;
            for (std::size_t i = 0; i < n; ++i) {
                weights[i] = std::pow(result.memberships.at(i, c), params.fuzziness);
                denom.add(weights[i]);
            }
            for (auto& acc : num) acc = KahanSum{};
            for (std::size_t i = 0; i < n; ++i) {
                const double* x = features.row(i);
                for (std::size_t j = 0; j < d; ++j) num[j].add(weights[i] * x[j]);
            }
            if (denom.sum > 0.0)
                for (std::size_t j = 0; j < d; ++j) result.centers.at(c, j) = num[j].sum / denom.sum;
        }

        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t c = 0; c < k; ++c)
                dsq.at(i, c) = squared_distance(features.row(i), result.centers.row(c), d);

        double step = 0.0;
        double row_sum_error = 0.0;
        std::vector<double> row(k);
        for (std::size_t i = 0; i < n; ++i) {
            update_membership_row(dsq.row(i), k, exponent, row.data());
            double sum = 0.0;
            for (std::uint32_t c = 0; c < k; ++c) {
                step = std::max(step, std::abs(row[c] - result.memberships.at(i, c)));
                result.memberships.at(i, c) = row[c];
                sum += row[c];
            }
            row_sum_error = std::max(row_sum_error, std::abs(sum - 1.0));
        }

        KahanSum objective;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t c = 0; c < k; ++c)
                objective.add(std::pow(result.memberships.at(i, c), params.fuzziness) *
                              dsq.at(i, c));

        result.iterations = iter;
        result.objective = objective.sum;
        result.objective_trace.push_back(objective.sum);
        result.row_sum_error_trace.push_back(row_sum_error);

        if (step < params.tolerance) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::vector<std::uint32_t> harden(const Matrix& memberships) {
    std::vector<std::uint32_t> labels(memberships.rows, 0);
    for (std::size_t i = 0; i < memberships.rows; ++i) {
        double best = memberships.at(i, 0);
        std::uint32_t arg = 0;
        for (std::size_t c = 1; c < memberships.cols; ++c) {
            if (memberships.at(i, c) > best) {
                best = memberships.at(i, c);
                arg = static_cast<std::uint32_t>(c);
            }
        }
        labels[i] = arg;
    }
    return labels;
}

}  // namespace kgpart
