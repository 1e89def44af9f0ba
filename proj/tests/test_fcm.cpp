#include <cmath>

#include "doctest.h"
#include "kgpart/fcm.hpp"
#include "testutil.hpp"

using namespace kgpart;

TEST_SUITE_BEGIN("fcm");

TEST_CASE("two far-separated tight groups are recovered exactly") {
    testutil::Rng rng(1);
    Matrix features = testutil::gaussian_blobs(rng, {{0.0, 0.0}, {100.0, 100.0}}, 10, 0.5);
    FcmParams params;
    params.k = 2;
    params.seed = 9;
    auto result = fcm(features, params);
    CHECK(result.converged);
    auto labels = harden(result.memberships);
    for (std::size_t i = 1; i < 10; ++i) CHECK(labels[i] == labels[0]);
    for (std::size_t i = 11; i < 20; ++i) CHECK(labels[i] == labels[10]);
    CHECK(labels[0] != labels[10]);
}

TEST_CASE("a point equidistant from both centers gets memberships (0.5, 0.5)") {
    Matrix features(1, 1, 0.0);  // single point at the origin
    Matrix centers(2, 1, 0.0);
    centers.at(0, 0) = -1.0;
    centers.at(1, 0) = 1.0;
    Matrix u = fcm_memberships(features, centers, 2.0);
    CHECK(u.at(0, 0) == 0.5);
    CHECK(u.at(0, 1) == 0.5);
}

TEST_CASE("a point on a center gets full membership there") {
    Matrix features(1, 2, 0.0);
    Matrix centers(2, 2, 0.0);
    centers.at(1, 0) = 3.0;
    Matrix u = fcm_memberships(features, centers, 2.0);
    CHECK(u.at(0, 0) == 1.0);
    CHECK(u.at(0, 1) == 0.0);
}

TEST_CASE("objective is non-increasing and labels match a reference run") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        testutil::Rng rng(40 + seed);
        Matrix features = testutil::gaussian_blobs(
            rng, {{0.0, 0.0}, {20.0, 0.0}, {0.0, 20.0}}, 10, 0.8);
        FcmParams params;
        params.k = 3;
        params.seed = seed;
        auto result = fcm(features, params);
        CHECK(result.converged);

        for (std::size_t i = 1; i < result.objective_trace.size(); ++i)
            CHECK(result.objective_trace[i] <= result.objective_trace[i - 1] + 1e-9);

        auto ref = testutil::reference_fcm(features, 3, 2.0, 1e-6, 300, seed + 1000);
        std::vector<std::uint32_t> ref_labels(features.rows, 0);
        for (std::size_t i = 0; i < features.rows; ++i) {
            double best = -1.0;
            for (std::uint32_t c = 0; c < 3; ++c)
                if (ref.memberships[i][c] > best) {
                    best = ref.memberships[i][c];
                    ref_labels[i] = c;
                }
        }
        CHECK(testutil::labels_equivalent(harden(result.memberships), ref_labels));
    }
}

TEST_CASE("membership rows sum to 1 within 1e-9 at every iteration") {
    testutil::Rng rng(77);
    Matrix features = testutil::gaussian_blobs(rng, {{0.0}, {4.0}, {9.0}}, 12, 1.0);
    FcmParams params;
    params.k = 4;
    params.seed = 3;
    auto result = fcm(features, params);
    REQUIRE(!result.row_sum_error_trace.empty());
    for (double err : result.row_sum_error_trace) CHECK(err < 1e-9);
}

TEST_CASE("no membership column is all-zero after convergence") {
    testutil::Rng rng(83);
    Matrix features = testutil::gaussian_blobs(rng, {{0.0, 0.0}, {15.0, 0.0}, {0.0, 15.0}},
                                               15, 1.0);
    FcmParams params;
    params.k = 3;
    params.seed = 6;
    auto result = fcm(features, params);
    REQUIRE(result.converged);
    for (std::size_t c = 0; c < 3; ++c) {
        double column_max = 0.0;
        for (std::size_t i = 0; i < features.rows; ++i)
            column_max = std::max(column_max, result.memberships.at(i, c));
        CHECK(column_max > 0.5);  // each cluster actually owns points
    }
}

TEST_CASE("parameter and input validation") {
    Matrix tiny(2, 1, 0.0);
    tiny.at(1, 0) = 1.0;
    FcmParams params;
    params.k = 3;
    CHECK_THROWS_AS(fcm(tiny, params), std::invalid_argument);  // n < k

    Matrix bad(4, 1, 0.0);
    bad.at(2, 0) = std::nan("");
    params.k = 2;
    CHECK_THROWS_AS(fcm(bad, params), std::invalid_argument);

    Matrix ok(4, 1, 0.0);
    ok.at(1, 0) = 1.0;
    ok.at(2, 0) = 2.0;
    ok.at(3, 0) = 3.0;
    params.fuzziness = 1.0;
    CHECK_THROWS_AS(fcm(ok, params), std::invalid_argument);
}

TEST_CASE("identical inputs and seed give identical results") {
    testutil::Rng rng(5);
    Matrix features = testutil::gaussian_blobs(rng, {{0.0, 1.0}, {5.0, 5.0}}, 8, 0.6);
    FcmParams params;
    params.k = 2;
    params.seed = 123;
    auto a = fcm(features, params);
    auto b = fcm(features, params);
    CHECK(a.memberships == b.memberships);
    CHECK(a.centers == b.centers);
    CHECK(a.objective == b.objective);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("harden");

TEST_CASE("argmax and tie-breaking") {
    Matrix u(2, 2, 0.0);
    u.at(0, 0) = 0.7;
    u.at(0, 1) = 0.3;
    u.at(1, 0) = 0.5;
    u.at(1, 1) = 0.5;
    auto labels = harden(u);
    CHECK(labels[0] == 0);
    CHECK(labels[1] == 0);  // tie resolves to the lowest index
}

TEST_CASE("random membership matrices match a linear-scan oracle") {
    testutil::Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 30));
        const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 6));
        Matrix u(n, k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
                u.at(i, c) = rng.real(0.0, 1.0);
                sum += u.at(i, c);
            }
            for (std::size_t c = 0; c < k; ++c) u.at(i, c) /= sum;
        }
        auto labels = harden(u);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t expected = 0;
            for (std::size_t c = 1; c < k; ++c)
                if (u.at(i, c) > u.at(i, expected)) expected = static_cast<std::uint32_t>(c);
            CHECK(labels[i] == expected);
        }
    }
}

TEST_SUITE_END();
