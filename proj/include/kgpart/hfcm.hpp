#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kgpart/fcm.hpp"
#include "kgpart/silhouette.hpp"
#include "kgpart/similarity.hpp"

namespace kgpart {

struct HfcmParams {
    std::uint64_t capacity = 0;  // machine capacity threshold, in triples
    std::uint32_t k_min = 2;
    std::uint32_t k_max = 6;
    double fuzziness = 2.0;
    double tolerance = 1e-6;
    std::uint32_t max_iterations = 300;
    std::uint64_t seed = 0;
    std::uint32_t max_depth = 16;

    // When set, a node re-derives its similarity matrix from the sub-corpus
    // instead of reusing the root matrix rows restricted to its members.
    std::function<SimilarityMatrix(const std::vector<PredIndex>&)> recompute;
};

enum class LeafReason : std::uint8_t {
    NotLeaf,
    CapacitySatisfied,  // triple_load <= capacity
    TooSmall,           // fewer than 2 * k_min members
    FixedPoint,         // split left every member in one cluster
    DepthLimit,
};

struct ClusterNode {
    std::uint32_t id = 0;  // pre-order
    std::uint32_t depth = 0;
    std::vector<PredIndex> members;  // ascending root predicate indices
    std::uint64_t triple_load = 0;
    LeafReason leaf_reason = LeafReason::NotLeaf;

    // Filled when a split was accepted at this node.
    std::uint32_t chosen_k = 0;
    double silhouette = 0.0;
    Matrix memberships;  // |members| x chosen_k
    std::vector<std::uint32_t> hard_labels;
    std::vector<KDiagnostic> diagnostics;

    std::vector<ClusterNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct ClusterTree {
    ClusterNode root;
    std::uint64_t capacity = 0;

    std::vector<const ClusterNode*> leaves() const;  // pre-order
    std::size_t leaf_count() const { return leaves().size(); }
    std::uint32_t depth() const;
};

// Recursive fuzzy splitting: a node over capacity is split with the
// silhouette-selected k and its hard-label children are processed the same
// way, until capacity, a fixed point, the minimum size or the depth bound
// stops the recursion. Deterministic given the seed (child seeds mix the
// parent seed with the child index).
ClusterTree hfcm(const SimilarityMatrix& cm, const std::vector<std::uint64_t>& triple_loads,
                 const HfcmParams& params);

const char* leaf_reason_name(LeafReason reason);

}  // namespace kgpart
