#include "kgpart/projection.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "kgpart/levels.hpp"

namespace kgpart {

bool PredicateProjection::has_edge(PredIndex a, PredIndex b) const {
    if (a == b) return false;
    if (a >= adjacency.size()) return false;
    const auto& adj = adjacency[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

PredicateProjection project_predicates(const IncidenceIndex& index) {
    PredicateProjection proj;
    proj.node_count = static_cast<std::uint32_t>(index.size());

    // Walk the reverse map: every entity contributes one co-occurrence to
    // each predicate pair it connects.
    std::unordered_map<std::uint64_t, std::uint32_t> pair_counts;
    for (const auto& [entity, preds] : index.entity_predicates) {
        for (std::size_t i = 0; i < preds.size(); ++i) {
            for (std::size_t j = i + 1; j < preds.size(); ++j) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(preds[i]) << 32) | preds[j];
                ++pair_counts[key];
            }
        }
    }

    proj.edges.reserve(pair_counts.size());
    for (const auto& [key, count] : pair_counts) {
        PredicateProjection::Edge e;
        e.a = static_cast<PredIndex>(key >> 32);
        e.b = static_cast<PredIndex>(key & 0xffffffffu);
        e.shared_count = count;
        proj.edges.push_back(e);
    }
    std::sort(proj.edges.begin(), proj.edges.end(),
              [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

    proj.adjacency.resize(proj.node_count);
    for (const auto& e : proj.edges) {
        proj.adjacency[e.a].push_back(e.b);
        proj.adjacency[e.b].push_back(e.a);
    }
    for (auto& adj : proj.adjacency) std::sort(adj.begin(), adj.end());
    return proj;
}

std::string projection_to_csv(const PredicateProjection& projection,
                              const LevelMatrix& levels, const IncidenceIndex& index) {
    std::ostringstream out;
    out << "predicate_i,predicate_j,shared_count,level\n";
    for (const auto& e : projection.edges) {
        out << index.iri(e.a) << ',' << index.iri(e.b) << ',' << e.shared_count << ','
            << levels.at(e.a, e.b) << '\n';
    }
    return out.str();
}

std::string projection_to_dot(const PredicateProjection& projection,
                              const IncidenceIndex& index) {
    std::ostringstream out;
    out << "graph predicate_projection {\n";
    for (PredIndex p = 0; p < projection.node_count; ++p)
        out << "  n" << p << " [label=\"" << index.iri(p) << "\"];\n";
    for (const auto& e : projection.edges)
        out << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.shared_count << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace kgpart
