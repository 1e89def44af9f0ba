#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgpart/corpus.hpp"

namespace kgpart {

// Run configuration: a flat key = value file with one section per pipeline
// stage. Unknown sections or keys are rejected. Every option can also be set
// by command-line flag; flags win.
struct RunConfig {
    std::vector<InputSpec> inputs;

    // [ingest]
    std::vector<std::string> predicate_blocklist = default_predicate_blocklist();
    MalformedPolicy malformed_policy = MalformedPolicy::Skip;

    // [graph]
    std::uint32_t lmax = 4;

    // [clustering]
    std::uint64_t capacity = 100000;
    std::uint32_t k_min = 2;
    std::uint32_t k_max = 6;
    double fuzziness = 2.0;
    double tolerance = 1e-6;
    std::uint32_t max_iterations = 300;
    std::uint64_t seed = 42;
    std::uint32_t max_depth = 16;
    bool recompute_per_node = false;

    // [run]
    std::string cache_dir = ".kgpart-cache";
    std::string out_dir = "kgpart-out";
    std::string log_level = "info";
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Parses `path`, resolving relative input paths against the file's
// directory. Throws kgpart::Error on unknown keys or malformed lines.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& base_dir);

void validate_config(const RunConfig& config);

// Key = value view of the effective configuration (manifest snapshot).
std::vector<std::pair<std::string, std::string>> config_snapshot(const RunConfig& config);

}  // namespace kgpart
