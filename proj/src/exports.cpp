#include "kgpart/exports.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace kgpart {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

json node_to_json(const ClusterNode& node, const std::vector<std::string>& labels) {
    json j;
    j["id"] = node.id;
    j["depth"] = node.depth;
    j["triple_load"] = node.triple_load;
    j["leaf"] = node.is_leaf();
    if (node.is_leaf()) j["leaf_reason"] = leaf_reason_name(node.leaf_reason);

    json members = json::array();
    for (std::size_t i = 0; i < node.members.size(); ++i) {
        json m;
        m["predicate"] = labels[node.members[i]];
        if (node.chosen_k > 0) {
            json row = json::array();
            for (std::uint32_t c = 0; c < node.chosen_k; ++c)
                row.push_back(node.memberships.at(i, c));
            m["membership"] = std::move(row);
            m["cluster"] = node.hard_labels[i];
        }
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);

    if (node.chosen_k > 0) {
        j["chosen_k"] = node.chosen_k;
        j["silhouette"] = node.silhouette;
        json diag = json::array();
        for (const auto& d : node.diagnostics)
            diag.push_back({{"k", d.k}, {"silhouette", d.silhouette}, {"objective", d.objective}});
        j["k_diagnostics"] = std::move(diag);
        json children = json::array();
        for (const auto& child : node.children) children.push_back(node_to_json(child, labels));
        j["children"] = std::move(children);
    }
    return j;
}

}  // namespace

std::string tree_to_json(const ClusterTree& tree, const std::vector<std::string>& labels) {
    json j;
    j["schema_version"] = 1;
    j["capacity"] = tree.capacity;
    j["leaf_count"] = tree.leaf_count();
    j["root"] = node_to_json(tree.root, labels);
    return j.dump(2) + "\n";
}

namespace {

void collect_assignments(const ClusterNode& node, const std::vector<std::string>& labels,
                         const std::vector<double>& route_membership, std::ostringstream& out) {
    if (node.is_leaf()) {
        for (std::size_t i = 0; i < node.members.size(); ++i) {
            out << labels[node.members[i]] << ',' << node.id << ','
                << format_double(route_membership[node.members[i]]) << '\n';
        }
        return;
    }
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        std::vector<double> child_membership = route_membership;
        const auto& child = node.children[c];
        // membership of each routed member in the cluster that became this child
        for (std::size_t i = 0; i < node.members.size(); ++i) {
            const PredIndex p = node.members[i];
            for (PredIndex q : child.members) {
                if (q == p) {
                    child_membership[p] = node.memberships.at(i, node.hard_labels[i]);
                    break;
                }
            }
        }
        collect_assignments(child, labels, child_membership, out);
    }
}

}  // namespace

std::string assignments_to_csv(const ClusterTree& tree, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "predicate,leaf,top_membership\n";
    std::vector<double> route(labels.size(), 1.0);
    collect_assignments(tree.root, labels, route, out);
    return out.str();
}

std::string coverage_to_json(const CoverageReport& report) {
    json j;
    j["schema_version"] = 1;
    json leaves = json::array();
    for (const auto& leaf : report.leaves) {
        json l;
        l["leaf"] = leaf.leaf_id;
        l["triple_load"] = leaf.triple_load;
        json datasets = json::object();
        for (const auto& [name, share] : leaf.by_dataset) {
            datasets[name] = {{"predicates", share.predicate_count},
                              {"triples", share.triple_count},
                              {"fraction", share.fraction}};
        }
        l["datasets"] = std::move(datasets);
        leaves.push_back(std::move(l));
    }
    j["clusters"] = std::move(leaves);
    json spread = json::object();
    for (const auto& [name, count] : report.spread) spread[name] = count;
    j["dataset_spread"] = std::move(spread);
    return j.dump(2) + "\n";
}

std::string coverage_to_csv(const CoverageReport& report) {
    std::ostringstream out;
    out << "leaf,dataset,predicates,triples,fraction\n";
    for (const auto& leaf : report.leaves) {
        for (const auto& [name, share] : leaf.by_dataset) {
            out << leaf.leaf_id << ',' << name << ',' << share.predicate_count << ','
                << share.triple_count << ',' << format_double(share.fraction) << '\n';
        }
    }
    return out.str();
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string coverage_to_dot(const ClusterTree& tree, const std::vector<std::string>& labels,
                            const std::vector<std::string>& predicate_datasets) {
    std::map<std::string, std::size_t> colors;
    for (const auto& tag : predicate_datasets)
        if (!tag.empty()) colors.emplace(tag, 0);
    std::size_t next = 0;
    for (auto& [tag, idx] : colors) idx = next++ % (sizeof(kPalette) / sizeof(kPalette[0]));

    std::ostringstream out;
    out << "graph clusters {\n  node [style=filled];\n";
    for (const ClusterNode* leaf : tree.leaves()) {
        out << "  subgraph cluster_" << leaf->id << " {\n";
        out << "    label=\"leaf " << leaf->id << " (" << leaf->triple_load << " triples)\";\n";
        for (PredIndex p : leaf->members) {
            const std::string& tag = predicate_datasets[p];
            out << "    p" << p << " [label=\"" << labels[p] << "\", fillcolor=\""
                << kPalette[colors[tag]] << "\", tooltip=\"" << tag << "\"];\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace kgpart
