#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgpart/error.hpp"
#include "kgpart/pipeline.hpp"

namespace {

struct CliOverrides {
    std::string config_path;
    std::vector<std::string> inputs;
    std::vector<std::string> blocklist;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> capacity;
    std::optional<unsigned> threads;
    std::optional<std::uint32_t> k_min, k_max, lmax, max_depth, max_iterations;
    std::optional<double> fuzziness, tolerance;
    std::optional<std::string> cache_dir, out_dir, log_level;
    bool strict = false;
    bool recompute = false;
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "Config file (flags win over config values)");
    cmd->add_option("--input", o.inputs,
                    "Input N-Triples file, PATH or PATH=DATASET; repeatable. "
                    "Dataset tag defaults to the filename stem");
    cmd->add_option("--blocklist", o.blocklist,
                    "Predicate IRI prefix to drop (repeatable, replaces the config "
                    "blocklist; pass 'none' to disable filtering). Default: rdf:, rdfs:, owl:");
    cmd->add_option("--seed", o.seed, "Clustering seed (default 42)");
    cmd->add_option("--threads", o.threads, "Worker thread cap (default: hardware)");
    cmd->add_option("--cache-dir", o.cache_dir, "Cache directory (default .kgpart-cache)");
    cmd->add_option("--out-dir", o.out_dir, "Run output directory (default kgpart-out)");
    cmd->add_option("--capacity", o.capacity,
                    "Machine capacity threshold in triples (default 100000)");
    cmd->add_option("--k-min", o.k_min, "Smallest cluster count to evaluate (default 2)");
    cmd->add_option("--k-max", o.k_max, "Largest cluster count to evaluate (default 6)");
    cmd->add_option("--lmax", o.lmax, "Neighbor level cap for propagation (default 4)");
    cmd->add_option("--fuzziness", o.fuzziness, "FCM fuzziness exponent (default 2.0)");
    cmd->add_option("--tolerance", o.tolerance,
                    "FCM convergence tolerance on membership change (default 1e-6)");
    cmd->add_option("--max-iterations", o.max_iterations, "FCM iteration cap (default 300)");
    cmd->add_option("--max-depth", o.max_depth, "HFCM recursion depth bound (default 16)");
    cmd->add_option("--log-level", o.log_level, "debug|info|warn|error|quiet (default info)");
    cmd->add_flag("--strict", o.strict, "Abort on the first malformed input line");
    cmd->add_flag("--recompute-per-node", o.recompute,
                  "Re-derive the similarity matrix per HFCM node instead of reusing "
                  "root matrix rows");
}

kgpart::RunConfig build_config(const CliOverrides& o) {
    kgpart::RunConfig config =
        o.config_path.empty() ? kgpart::RunConfig{} : kgpart::load_config(o.config_path);
    for (const std::string& spec : o.inputs) {
        kgpart::InputSpec input;
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            input.path = spec;
        } else {
            input.path = spec.substr(0, eq);
            input.dataset = spec.substr(eq + 1);
        }
        config.inputs.push_back(std::move(input));
    }
    if (!o.blocklist.empty()) {
        config.predicate_blocklist.clear();
        for (const auto& entry : o.blocklist)
            if (entry != "none") config.predicate_blocklist.push_back(entry);
    }
    if (o.seed) config.seed = *o.seed;
    if (o.capacity) config.capacity = *o.capacity;
    if (o.threads) config.threads = *o.threads;
    if (o.k_min) config.k_min = *o.k_min;
    if (o.k_max) config.k_max = *o.k_max;
    if (o.lmax) config.lmax = *o.lmax;
    if (o.max_depth) config.max_depth = *o.max_depth;
    if (o.max_iterations) config.max_iterations = *o.max_iterations;
    if (o.fuzziness) config.fuzziness = *o.fuzziness;
    if (o.tolerance) config.tolerance = *o.tolerance;
    if (o.cache_dir) config.cache_dir = *o.cache_dir;
    if (o.out_dir) config.out_dir = *o.out_dir;
    if (o.log_level) config.log_level = *o.log_level;
    if (o.strict) config.malformed_policy = kgpart::MalformedPolicy::Strict;
    if (o.recompute) config.recompute_per_node = true;
    return config;
}

int run_stage(const CliOverrides& overrides, kgpart::PipelineStage stage) {
    const kgpart::RunConfig config = build_config(overrides);
    const kgpart::PipelineResult result = kgpart::run_pipeline(config, stage);

    if (stage == kgpart::PipelineStage::Stats) {
        std::cout << kgpart::stats_table(result.stats);
        std::cout << "predicates after blocklist filter: " << result.predicates_after << " (from "
                  << result.predicates_before << ")\n";
    } else if (stage == kgpart::PipelineStage::Report) {
        std::cout << "leaf clusters: " << result.tree.leaf_count() << "\n";
        std::cout << "machines planned: " << result.plan.machines.size() << " (capacity "
                  << result.plan.capacity << ")\n";
    }
    std::cout << "outputs written to " << result.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "kgpart - semantic partitioning of RDF knowledge graphs.\n"
        "Measures predicate closeness from shared entities, propagates it across\n"
        "neighbor levels, clusters predicates hierarchically and plans per-machine\n"
        "partitions."};
    app.require_subcommand(1);

    CliOverrides overrides;
    struct SubSpec {
        const char* name;
        const char* help;
        kgpart::PipelineStage stage;
    };
    const SubSpec specs[] = {
        {"stats", "Parse inputs and report corpus statistics", kgpart::PipelineStage::Stats},
        {"graph", "Build the predicate projection graph and neighbor levels",
         kgpart::PipelineStage::Graph},
        {"similarity", "Compute the predicate similarity matrix (cached)",
         kgpart::PipelineStage::Similarity},
        {"cluster", "Run hierarchical fuzzy clustering", kgpart::PipelineStage::Cluster},
        {"report", "Produce coverage reports and the machine partition plan",
         kgpart::PipelineStage::Report},
        {"pipeline", "Run every stage end to end", kgpart::PipelineStage::Report},
    };
    for (const SubSpec& spec : specs) {
        CLI::App* cmd = app.add_subcommand(spec.name, spec.help);
        add_common_options(cmd, overrides);
        cmd->callback([&overrides, stage = spec.stage] {
            const int rc = run_stage(overrides, stage);
            if (rc != 0) throw CLI::RuntimeError(rc);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const kgpart::StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
