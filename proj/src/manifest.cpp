#include "kgpart/manifest.hpp"

#include <fstream>

#include "json.hpp"
#include "kgpart/error.hpp"
#include "kgpart/util/hash.hpp"

namespace kgpart {

std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot hash missing file: " + path);
    char buf[1 << 16];
    std::uint64_t h = kFnvOffset;
    while (in) {
        in.read(buf, sizeof(buf));
        h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
    }
    return h;
}

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::json j;
    j["schema_version"] = 1;
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [path, hash] : manifest.input_hashes) inputs[path] = hash;
    j["input_hashes"] = std::move(inputs);
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : manifest.config) config[key] = value;
    j["config"] = std::move(config);
    j["config_hash"] = manifest.config_hash;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& stage : manifest.stages)
        stages.push_back({{"stage", stage.name},
                          {"seconds", stage.seconds},
                          {"cached", stage.cached}});
    j["stages"] = std::move(stages);
    j["outputs"] = manifest.outputs;
    return j.dump(2) + "\n";
}

}  // namespace kgpart
