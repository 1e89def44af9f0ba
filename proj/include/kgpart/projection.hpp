#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgpart/incidence.hpp"

namespace kgpart {

struct LevelMatrix;

// Undirected predicate co-occurrence graph: an edge wherever two predicates
// share at least one entity, weighted by the intersection size.
struct PredicateProjection {
    struct Edge {
        PredIndex a = 0, b = 0;  // a < b
        std::uint32_t shared_count = 0;
    };

    std::uint32_t node_count = 0;
    std::vector<Edge> edges;                        // sorted by (a, b)
    std::vector<std::vector<PredIndex>> adjacency;  // per node, sorted

    bool has_edge(PredIndex a, PredIndex b) const;
};

PredicateProjection project_predicates(const IncidenceIndex& index);

// Edge list export: predicate_i, predicate_j, shared_count, level.
std::string projection_to_csv(const PredicateProjection& projection,
                              const LevelMatrix& levels, const IncidenceIndex& index);
std::string projection_to_dot(const PredicateProjection& projection,
                              const IncidenceIndex& index);

}  // namespace kgpart
