#include "kgpart/levels.hpp"

#include <stdexcept>
#include <vector>

#include "kgpart/util/parallel.hpp"

namespace kgpart {

LevelMatrix neighbor_levels(const PredicateProjection& projection, std::uint32_t lmax,
                            unsigned threads) {
    if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
    LevelMatrix m;
    m.n = projection.node_count;
    m.cap = lmax;
    m.level.assign(static_cast<std::size_t>(m.n) * m.n, kUnreachable);

    parallel_for(m.n, threads, [&](std::size_t src) {
        auto* row = &m.level[src * m.n];
        row[src] = 0;
        std::vector<PredIndex> frontier{static_cast<PredIndex>(src)};
        std::vector<PredIndex> next;
        for (std::uint32_t depth = 1; depth <= lmax && !frontier.empty(); ++depth) {
            next.clear();
            for (PredIndex u : frontier) {
                for (PredIndex v : projection.adjacency[u]) {
                    if (row[v] == kUnreachable) {
                        row[v] = depth;
                        next.push_back(v);
                    }
                }
            }
            frontier.swap(next);
        }
    });
    return m;
}

bool reachable(PredIndex i, PredIndex j, const LevelMatrix& levels) {
    return levels.reachable(i, j);
}

}  // namespace kgpart
