#include "kgpart/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "kgpart/error.hpp"
#include "kgpart/util/hash.hpp"
#include "kgpart/util/io.hpp"
#include "kgpart/util/log.hpp"
#include "kgpart/util/parallel.hpp"

namespace kgpart {

namespace {

class StageRunner {
public:
    explicit StageRunner(RunManifest& manifest) : manifest_(manifest) {}

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        bool cached = false;
        try {
            cached = fn();
        } catch (const StageError&) {
            throw;
        } catch (const std::exception& e) {
            throw StageError(name, e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        manifest_.stages.push_back({name, elapsed.count(), cached});
        log_info("stage " + name + (cached ? " (cached) " : " ") + "took " +
                 std::to_string(elapsed.count()) + "s");
    }

private:
    RunManifest& manifest_;
};

void collect_depth_counts(const ClusterNode& node, std::vector<std::size_t>& nodes_at,
                          std::vector<std::size_t>& leaves_at) {
    nodes_at[node.depth] += 1;
    if (node.is_leaf()) leaves_at[node.depth] += 1;
    for (const auto& child : node.children) collect_depth_counts(child, nodes_at, leaves_at);
}

std::uint64_t filtered_corpus_hash(const std::vector<Triple>& triples,
                                   const TermInterner& interner, std::uint32_t lmax) {
    std::uint64_t h = kFnvOffset;
    for (const Triple& t : triples) {
        const std::string line = triple_to_ntriples(
            interner.term(t.subject), interner.term(t.predicate), interner.term(t.object));
        h = fnv1a64(line, h);
        h = fnv1a64(std::string_view("\n"), h);
    }
    return splitmix64(h ^ (0x6c6d6178ull + lmax));
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& config, PipelineStage until) {
    validate_config(config);
    log_threshold() = parse_log_level(config.log_level);
    const unsigned threads = config.threads == 0 ? default_thread_count() : config.threads;

    PipelineResult result;
    result.out_dir = config.out_dir;
    ensure_directory(config.out_dir);

    RunManifest& manifest = result.manifest;
    manifest.config = config_snapshot(config);
    {
        std::uint64_t h = kFnvOffset;
        for (const auto& [k, v] : manifest.config) {
            h = fnv1a64(k, h);
            h = fnv1a64(std::string_view("="), h);
            h = fnv1a64(v, h);
            h = fnv1a64(std::string_view(";"), h);
        }
        manifest.config_hash = to_hex(h);
    }

    auto emit = [&](const std::string& name, const std::string& content) {
        const std::string path = config.out_dir + "/" + name;
        write_file(path, content);
        manifest.outputs.push_back(path);
    };

    StageRunner runner(manifest);
    result.store = std::make_unique<TripleStore>();
    TripleStore& store = *result.store;
    FilterResult filtered;

    runner.run("ingest", [&] {
        if (config.inputs.empty()) throw Error("no inputs configured");
        for (const auto& input : config.inputs)
            manifest.input_hashes.emplace_back(input.path, to_hex(hash_file(input.path)));
        store.load_files(config.inputs, config.malformed_policy, threads);
        result.malformed_lines = store.malformed_total();
        if (result.malformed_lines > 0)
            log_warn(std::to_string(result.malformed_lines) + " malformed lines skipped");
        result.stats = corpus_stats(store.triples(), store.interner(), store.dataset_names());
        emit("stats.json", stats_to_json(result.stats));
        return false;
    });

    runner.run("filter", [&] {
        filtered = filter_builtin_predicates(store.triples(), store.interner(),
                                             config.predicate_blocklist);
        result.predicates_before = filtered.predicates_before;
        result.predicates_after = filtered.predicates_after;
        log_info("predicate filter: " + std::to_string(filtered.predicates_before) + " -> " +
                 std::to_string(filtered.predicates_after) + " unique predicates (" +
                 std::to_string(filtered.removed_triples) + " triples removed)");
        return false;
    });
    if (until < PipelineStage::Graph) {
        emit("manifest.json", manifest_to_json(manifest));
        return result;
    }

    runner.run("graph", [&] {
        result.index = build_incidence(filtered.triples, store.interner());
        result.projection = project_predicates(result.index);
        result.levels = neighbor_levels(result.projection, config.lmax, threads);
        emit("projection.csv", projection_to_csv(result.projection, result.levels, result.index));
        emit("projection.dot", projection_to_dot(result.projection, result.index));
        return false;
    });
    if (until < PipelineStage::Similarity) {
        emit("manifest.json", manifest_to_json(manifest));
        return result;
    }

    runner.run("similarity", [&] {
        std::vector<std::string> labels;
        labels.reserve(result.index.size());
        for (PredIndex p = 0; p < result.index.size(); ++p) labels.push_back(result.index.iri(p));

        const std::uint64_t key =
            filtered_corpus_hash(filtered.triples, store.interner(), config.lmax);
        ensure_directory(config.cache_dir);
        const std::string cache_path = config.cache_dir + "/cm-" + to_hex(key) + ".bin";

        bool cached = false;
        if (file_exists(cache_path)) {
            if (read_similarity_binary(cache_path, labels, result.cm)) {
                cached = true;
            } else {
                log_warn("ignoring corrupt similarity cache: " + cache_path);
            }
        }
        if (!cached) {
            const Matrix scores = propagate_similarity(result.levels, result.index, threads);
            result.cm = assemble_matrix(scores, result.index);
            write_similarity_binary(result.cm, cache_path);
        }
        result.cm_cached = cached;
        emit("cm.csv", similarity_to_csv(result.cm));
        write_similarity_binary(result.cm, config.out_dir + "/cm.bin");
        manifest.outputs.push_back(config.out_dir + "/cm.bin");
        return cached;
    });
    if (until < PipelineStage::Cluster) {
        emit("manifest.json", manifest_to_json(manifest));
        return result;
    }

    runner.run("cluster", [&] {
        HfcmParams params;
        params.capacity = config.capacity;
        params.k_min = config.k_min;
        params.k_max = config.k_max;
        params.fuzziness = config.fuzziness;
        params.tolerance = config.tolerance;
        params.max_iterations = config.max_iterations;
        params.seed = config.seed;
        params.max_depth = config.max_depth;
        if (config.recompute_per_node) {
            // Re-derive the similarity matrix from each node's sub-corpus.
            params.recompute = [&](const std::vector<PredIndex>& members) {
                std::vector<Triple> subset;
                std::vector<bool> keep(result.index.size(), false);
                for (PredIndex p : members) keep[p] = true;
                for (const Triple& t : filtered.triples) {
                    auto it = result.index.predicate_index.find(t.predicate);
                    if (it != result.index.predicate_index.end() && keep[it->second])
                        subset.push_back(t);
                }
                IncidenceIndex sub = build_incidence(subset, store.interner());
                PredicateProjection proj = project_predicates(sub);
                LevelMatrix levels = neighbor_levels(proj, config.lmax, 1);
                return assemble_matrix(propagate_similarity(levels, sub, 1), sub);
            };
        }
        result.tree = hfcm(result.cm, result.index.triple_count, params);
        emit("clusters.json", tree_to_json(result.tree, result.cm.labels));
        emit("assignments.csv", assignments_to_csv(result.tree, result.cm.labels));

        // per-k silhouette table for the root split
        for (const auto& d : result.tree.root.diagnostics) {
            std::ostringstream row;
            row << "  k=" << d.k << "  silhouette=" << d.silhouette
                << "  objective=" << d.objective;
            log_info(row.str());
        }
        // active cluster count after each level: nodes at that depth plus
        // leaves that stopped earlier
        const std::uint32_t depth = result.tree.depth();
        std::vector<std::size_t> nodes_at(depth + 1, 0), leaves_at(depth + 1, 0);
        collect_depth_counts(result.tree.root, nodes_at, leaves_at);
        std::ostringstream counts;
        counts << "cluster counts per level:";
        std::size_t carried = 0;
        for (std::uint32_t d = 0; d <= depth; ++d) {
            counts << " L" << d << "=" << (nodes_at[d] + carried);
            carried += leaves_at[d];
        }
        log_info(counts.str());
        return false;
    });
    if (until < PipelineStage::Report) {
        emit("manifest.json", manifest_to_json(manifest));
        return result;
    }

    runner.run("report", [&] {
        result.predicate_datasets =
            predicate_dataset_labels(filtered.triples, result.index, store.dataset_names());
        result.coverage =
            coverage_report(result.tree, result.predicate_datasets, result.index.triple_count);
        result.plan = partition_plan(result.tree, config.capacity);
        emit("coverage.json", coverage_to_json(result.coverage));
        emit("coverage.csv", coverage_to_csv(result.coverage));
        emit("clusters.dot",
             coverage_to_dot(result.tree, result.cm.labels, result.predicate_datasets));
        emit("plan.csv", plan_to_csv(result.plan));
        return false;
    });

    emit("manifest.json", manifest_to_json(manifest));
    return result;
}

}  // namespace kgpart
