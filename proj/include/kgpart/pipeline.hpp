#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "kgpart/config.hpp"
#include "kgpart/corpus.hpp"
#include "kgpart/coverage.hpp"
#include "kgpart/exports.hpp"
#include "kgpart/hfcm.hpp"
#include "kgpart/incidence.hpp"
#include "kgpart/levels.hpp"
#include "kgpart/manifest.hpp"
#include "kgpart/partition_plan.hpp"
#include "kgpart/projection.hpp"
#include "kgpart/similarity.hpp"

namespace kgpart {

enum class PipelineStage : int {
    Stats = 0,
    Graph = 1,
    Similarity = 2,
    Cluster = 3,
    Report = 4,
};

struct PipelineResult {
    // Owns the interned terms every later stage's ids refer to.
    std::unique_ptr<TripleStore> store;

    CorpusStats stats;
    std::uint64_t malformed_lines = 0;
    std::uint64_t predicates_before = 0;
    std::uint64_t predicates_after = 0;

    IncidenceIndex index;
    PredicateProjection projection;
    LevelMatrix levels;
    SimilarityMatrix cm;
    bool cm_cached = false;

    ClusterTree tree;
    std::vector<std::string> predicate_datasets;
    CoverageReport coverage;
    PartitionPlan plan;

    RunManifest manifest;
    std::string out_dir;
};

// Runs ingest -> filter -> graph -> similarity -> cluster -> report up to
// `until`, writing each completed stage's outputs under config.out_dir and
// a manifest at the end. The similarity matrix is cached in config.cache_dir
// keyed by a content hash of the filtered triples and lmax; a valid cache
// skips recomputation, a corrupt one is ignored with a warning. Failures
// rethrow as StageError naming the stage; outputs written so far remain.
PipelineResult run_pipeline(const RunConfig& config,
                            PipelineStage until = PipelineStage::Report);

}  // namespace kgpart
