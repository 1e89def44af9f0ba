#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgpart/hfcm.hpp"
#include "kgpart/incidence.hpp"

namespace kgpart {

struct DatasetShare {
    std::uint64_t predicate_count = 0;
    std::uint64_t triple_count = 0;
    double fraction = 0.0;  // of the cluster's triple load
};

struct LeafCoverage {
    std::uint32_t leaf_id = 0;
    std::uint64_t triple_load = 0;
    std::map<std::string, DatasetShare> by_dataset;  // alphabetical
};

struct CoverageReport {
    std::vector<LeafCoverage> leaves;              // tree leaf order
    std::map<std::string, std::uint32_t> spread;   // dataset -> #clusters touched
};

// Dataset attribution per predicate: the tag of its first occurrence, or
// "shared:{a+b}" (tags sorted) when a predicate appears in several source
// datasets.
std::vector<std::string> predicate_dataset_labels(const std::vector<Triple>& triples,
                                                  const IncidenceIndex& index,
                                                  const std::vector<std::string>& dataset_names);

// Per-leaf dataset histogram plus the per-dataset cluster spread. Throws
// kgpart::Error when a member predicate carries no dataset tag.
CoverageReport coverage_report(const ClusterTree& tree,
                               const std::vector<std::string>& predicate_datasets,
                               const std::vector<std::uint64_t>& triple_loads);

}  // namespace kgpart
