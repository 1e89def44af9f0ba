#pragma once

#include <cstdint>
#include <vector>

#include "kgpart/projection.hpp"

namespace kgpart {

inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

// Pairwise neighbour levels: shortest-path lengths between predicates in the
// projection graph, truncated at `cap`. level(p,p) = 0 by convention,
// level = kUnreachable beyond the cap or across components.
struct LevelMatrix {
    std::uint32_t n = 0;
    std::uint32_t cap = 0;
    std::vector<std::uint32_t> level;  // n*n, row-major

    std::uint32_t at(PredIndex i, PredIndex j) const {
        return level[static_cast<std::size_t>(i) * n + j];
    }
    bool reachable(PredIndex i, PredIndex j) const { return at(i, j) != kUnreachable; }
};

// Breadth-first from every predicate, depth-limited to lmax. BFS sources are
// independent; `threads` > 1 splits them across workers.
LevelMatrix neighbor_levels(const PredicateProjection& projection, std::uint32_t lmax,
                            unsigned threads = 1);

bool reachable(PredIndex i, PredIndex j, const LevelMatrix& levels);

}  // namespace kgpart
