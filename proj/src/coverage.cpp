#include "kgpart/coverage.hpp"

#include <algorithm>
#include <set>

#include "kgpart/error.hpp"

namespace kgpart {

std::vector<std::string> predicate_dataset_labels(const std::vector<Triple>& triples,
                                                  const IncidenceIndex& index,
                                                  const std::vector<std::string>& dataset_names) {
    std::vector<std::set<DatasetId>> seen(index.size());
    for (const Triple& t : triples) {
        auto it = index.predicate_index.find(t.predicate);
        if (it == index.predicate_index.end()) continue;
        seen[it->second].insert(t.dataset);
    }
    std::vector<std::string> labels(index.size());
    for (PredIndex p = 0; p < index.size(); ++p) {
        const auto& sources = seen[p];
        if (sources.empty()) continue;  // stays empty, caller decides
        if (sources.size() == 1) {
            labels[p] = dataset_names.at(*sources.begin());
            continue;
        }
        std::vector<std::string> tags;
        tags.reserve(sources.size());
        for (DatasetId d : sources) tags.push_back(dataset_names.at(d));
        std::sort(tags.begin(), tags.end());
        std::string label = "shared:{" + tags.front();
        for (std::size_t i = 1; i < tags.size(); ++i) label += "+" + tags[i];
        label += "}";
        labels[p] = std::move(label);
    }
    return labels;
}

CoverageReport coverage_report(const ClusterTree& tree,
                               const std::vector<std::string>& predicate_datasets,
                               const std::vector<std::uint64_t>& triple_loads) {
    CoverageReport report;
    for (const ClusterNode* leaf : tree.leaves()) {
        LeafCoverage cov;
        cov.leaf_id = leaf->id;
        cov.triple_load = leaf->triple_load;
        for (PredIndex p : leaf->members) {
            if (p >= predicate_datasets.size() || predicate_datasets[p].empty())
                throw Error("predicate index " + std::to_string(p) + " has no dataset tag");
            DatasetShare& share = cov.by_dataset[predicate_datasets[p]];
            share.predicate_count += 1;
            share.triple_count += triple_loads.at(p);
        }
        for (auto& [dataset, share] : cov.by_dataset) {
            share.fraction = cov.triple_load == 0
                                 ? 0.0
                                 : static_cast<double>(share.triple_count) /
                                       static_cast<double>(cov.triple_load);
            ++report.spread[dataset];
        }
        report.leaves.push_back(std::move(cov));
    }
    return report;
}

}  // namespace kgpart
