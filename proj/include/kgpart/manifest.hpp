#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kgpart {

struct StageRecord {
    std::string name;
    double seconds = 0.0;
    bool cached = false;
};

// Provenance record emitted for every successful run: input content hashes,
// the effective config, per-stage timings and the written outputs.
struct RunManifest {
    std::vector<std::pair<std::string, std::string>> input_hashes;  // path -> hex
    std::vector<std::pair<std::string, std::string>> config;
    std::string config_hash;
    std::vector<StageRecord> stages;
    std::vector<std::string> outputs;
};

std::uint64_t hash_file(const std::string& path);
std::string manifest_to_json(const RunManifest& manifest);

}  // namespace kgpart
