#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgpart/incidence.hpp"
#include "kgpart/levels.hpp"
#include "kgpart/matrix.hpp"

namespace kgpart {

// Symmetric matrix of propagated probability-based similarity scores with a
// unit diagonal; row i belongs to the predicate with the i-th smallest IRI.
struct SimilarityMatrix {
    std::uint32_t n = 0;
    Matrix values;                      // n x n
    std::vector<std::string> labels;    // predicate IRIs in row order

    double at(PredIndex i, PredIndex j) const { return values.at(i, j); }
};

// Level-1 score (|A∩B|/|A|) * (|A∩B|/|B|) over the two predicates' entity
// neighbourhoods. Throws std::out_of_range for unknown indices.
double level1_similarity(PredIndex pi, PredIndex pj, const IncidenceIndex& index);

// Pairwise scores for every reachable pair, staged by level: level 1 scores
// directly, level 2 as the best product through a shared level-1 neighbour,
// level m > 2 as the best max(ps(i,k), ps(k,j)) over intermediates on a
// level-exact split p + q = m. Unreachable pairs stay 0. Returns a dense
// n x n score table with zero diagonal.
Matrix propagate_similarity(const LevelMatrix& levels, const IncidenceIndex& index,
                            unsigned threads = 1);

// Unit diagonal + symmetric off-diagonal scores. Throws kgpart::Error if the
// score table is not symmetric.
SimilarityMatrix assemble_matrix(const Matrix& scores, const IncidenceIndex& index);

std::string similarity_to_csv(const SimilarityMatrix& cm);

// Compact binary cache: 8 magic bytes, u64 n, n*n little-endian doubles.
// The reader validates magic and size against `labels` and returns false on
// any mismatch or truncation (corrupt caches are recomputed, not fatal).
void write_similarity_binary(const SimilarityMatrix& cm, const std::string& path);
bool read_similarity_binary(const std::string& path, const std::vector<std::string>& labels,
                            SimilarityMatrix& out);

}  // namespace kgpart
