#pragma once

#include <string>
#include <vector>

#include "kgpart/coverage.hpp"
#include "kgpart/hfcm.hpp"
#include "kgpart/partition_plan.hpp"

namespace kgpart {

// All exports are deterministic byte streams for identical inputs.

// Cluster tree as JSON: per node id, triple_load, chosen_k, silhouette,
// members (with fuzzy membership rows at split nodes) and children.
std::string tree_to_json(const ClusterTree& tree, const std::vector<std::string>& labels);

// Flat per-predicate view: predicate, leaf id, top membership (the degree
// with which the parent split routed the predicate into this leaf).
std::string assignments_to_csv(const ClusterTree& tree, const std::vector<std::string>& labels);

std::string coverage_to_json(const CoverageReport& report);
std::string coverage_to_csv(const CoverageReport& report);

// Leaves rendered as subgraph boxes with dataset-colored predicate nodes.
std::string coverage_to_dot(const ClusterTree& tree, const std::vector<std::string>& labels,
                            const std::vector<std::string>& predicate_datasets);

}  // namespace kgpart
