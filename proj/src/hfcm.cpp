#include "kgpart/hfcm.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgpart/error.hpp"
#include "kgpart/util/hash.hpp"

namespace kgpart {

namespace {

Matrix restrict_features(const Matrix& cm, const std::vector<PredIndex>& members) {
    Matrix out(members.size(), members.size(), 0.0);
    for (std::size_t r = 0; r < members.size(); ++r)
        for (std::size_t c = 0; c < members.size(); ++c)
            out.at(r, c) = cm.at(members[r], members[c]);
    return out;
}

struct Builder {
    const SimilarityMatrix& cm;
    const std::vector<std::uint64_t>& loads;
    const HfcmParams& params;

    std::uint64_t load_of(const std::vector<PredIndex>& members) const {
        std::uint64_t total = 0;
        for (PredIndex p : members) total += loads[p];
        return total;
    }

    ClusterNode build(std::vector<PredIndex> members, std::uint32_t depth,
                      std::uint64_t seed) const {
        ClusterNode node;
        node.depth = depth;
        node.triple_load = load_of(members);
        node.members = std::move(members);

        if (node.triple_load <= params.capacity) {
            node.leaf_reason = LeafReason::CapacitySatisfied;
            return node;
        }
        if (node.members.size() < 2ull * params.k_min) {
            node.leaf_reason = LeafReason::TooSmall;
            return node;
        }
        if (depth >= params.max_depth) {
            node.leaf_reason = LeafReason::DepthLimit;
            return node;
        }

        const Matrix features =
            params.recompute ? params.recompute(node.members).values
                             : restrict_features(cm.values, node.members);
        const std::uint32_t k_hi = std::min<std::uint32_t>(
            params.k_max, static_cast<std::uint32_t>(node.members.size() - 1));
        if (k_hi < params.k_min) {
            node.leaf_reason = LeafReason::TooSmall;
            return node;
        }

        FcmParams fcm_params;
        fcm_params.fuzziness = params.fuzziness;
        fcm_params.tolerance = params.tolerance;
        fcm_params.max_iterations = params.max_iterations;
        fcm_params.seed = seed;
        KSelection sel = select_k(features, params.k_min, k_hi, fcm_params);

        std::vector<std::vector<PredIndex>> groups(sel.best_k);
        for (std::size_t i = 0; i < node.members.size(); ++i)
            groups[sel.best_labels[i]].push_back(node.members[i]);
        std::size_t populated = 0;
        for (const auto& g : groups)
            if (!g.empty()) ++populated;
        if (populated < 2) {
            // every member stayed in one cluster: no further change possible
            node.leaf_reason = LeafReason::FixedPoint;
            return node;
        }

        node.chosen_k = sel.best_k;
        node.silhouette = sel.best_silhouette;
        node.memberships = std::move(sel.best_run.memberships);
        node.hard_labels = std::move(sel.best_labels);
        node.diagnostics = std::move(sel.diagnostics);

        std::uint32_t ordinal = 0;
        for (auto& group : groups) {
            if (group.empty()) continue;
            node.children.push_back(build(std::move(group), depth + 1,
                                          mix_seed(seed, ordinal)));
            ++ordinal;
        }
        return node;
    }
};

void number_preorder(ClusterNode& node, std::uint32_t& next) {
    node.id = next++;
    for (auto& child : node.children) number_preorder(child, next);
}

void collect_leaves(const ClusterNode& node, std::vector<const ClusterNode*>& out) {
    if (node.is_leaf()) {
        out.push_back(&node);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

std::uint32_t max_depth_of(const ClusterNode& node) {
    std::uint32_t deepest = node.depth;
    for (const auto& child : node.children) deepest = std::max(deepest, max_depth_of(child));
    return deepest;
}

}  // namespace

std::vector<const ClusterNode*> ClusterTree::leaves() const {
    std::vector<const ClusterNode*> out;
    collect_leaves(root, out);
    return out;
}

std::uint32_t ClusterTree::depth() const { return max_depth_of(root); }

ClusterTree hfcm(const SimilarityMatrix& cm, const std::vector<std::uint64_t>& triple_loads,
                 const HfcmParams& params) {
    if (params.capacity == 0) throw std::invalid_argument("hfcm: capacity must be positive");
    if (params.k_min < 2) throw std::invalid_argument("hfcm: k_min must be >= 2");
    if (params.k_max < params.k_min) throw std::invalid_argument("hfcm: empty k range");
    if (triple_loads.size() != cm.n)
        throw Error("hfcm: triple load count does not match matrix size");

    std::vector<PredIndex> all(cm.n);
    for (PredIndex p = 0; p < cm.n; ++p) all[p] = p;

    Builder builder{cm, triple_loads, params};
    ClusterTree tree;
    tree.capacity = params.capacity;
    tree.root = builder.build(std::move(all), 0, params.seed);
    std::uint32_t next_id = 0;
    number_preorder(tree.root, next_id);
    return tree;
}

const char* leaf_reason_name(LeafReason reason) {
    switch (reason) {
        case LeafReason::NotLeaf: return "not_leaf";
        case LeafReason::CapacitySatisfied: return "capacity_satisfied";
        case LeafReason::TooSmall: return "too_small";
        case LeafReason::FixedPoint: return "fixed_point";
        case LeafReason::DepthLimit: return "depth_limit";
    }
    return "unknown";
}

}  // namespace kgpart
