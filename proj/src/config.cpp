#include "kgpart/config.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <sstream>

#include "kgpart/error.hpp"
#include "kgpart/util/io.hpp"
#include "kgpart/util/log.hpp"

namespace kgpart {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw Error("config: bad integer for " + key + ": '" + value + "'");
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        throw Error("config: bad number for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw Error("config: bad boolean for " + key + ": '" + value + "'");
}

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (base_dir.empty() || path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& base_dir) {
    RunConfig config;
    std::istringstream in(text);
    std::string line, section;
    std::size_t line_no = 0;
    bool blocklist_touched = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw Error("config line " + std::to_string(line_no) +
                                             ": unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section != "inputs" && section != "ingest" && section != "graph" &&
                section != "clustering" && section != "run")
                throw Error("config: unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw Error("config line " + std::to_string(line_no) + ": empty key");

        if (section == "inputs") {
            if (key != "input") throw Error("config: unknown key '" + key + "' in [inputs]");
            std::istringstream parts(value);
            InputSpec spec;
            parts >> spec.path >> spec.dataset;
            if (spec.path.empty())
                throw Error("config line " + std::to_string(line_no) + ": input needs a path");
            spec.path = resolve(base_dir, spec.path);
            config.inputs.push_back(std::move(spec));
        } else if (section == "ingest") {
            if (key == "predicate_blocklist") {
                if (!blocklist_touched) {
                    config.predicate_blocklist.clear();
                    blocklist_touched = true;
                }
                if (value != "none") config.predicate_blocklist.push_back(value);
            } else if (key == "malformed_policy") {
                if (value == "skip") config.malformed_policy = MalformedPolicy::Skip;
                else if (value == "strict") config.malformed_policy = MalformedPolicy::Strict;
                else throw Error("config: malformed_policy must be skip or strict");
            } else {
                throw Error("config: unknown key '" + key + "' in [ingest]");
            }
        } else if (section == "graph") {
            if (key == "lmax") config.lmax = static_cast<std::uint32_t>(parse_u64(key, value));
            else throw Error("config: unknown key '" + key + "' in [graph]");
        } else if (section == "clustering") {
            if (key == "capacity") config.capacity = parse_u64(key, value);
            else if (key == "k_min") config.k_min = static_cast<std::uint32_t>(parse_u64(key, value));
            else if (key == "k_max") config.k_max = static_cast<std::uint32_t>(parse_u64(key, value));
            else if (key == "fuzziness") config.fuzziness = parse_double(key, value);
            else if (key == "tolerance") config.tolerance = parse_double(key, value);
            else if (key == "max_iterations")
                config.max_iterations = static_cast<std::uint32_t>(parse_u64(key, value));
            else if (key == "seed") config.seed = parse_u64(key, value);
            else if (key == "max_depth")
                config.max_depth = static_cast<std::uint32_t>(parse_u64(key, value));
            else if (key == "recompute_per_node") config.recompute_per_node = parse_bool(key, value);
            else throw Error("config: unknown key '" + key + "' in [clustering]");
        } else if (section == "run") {
            if (key == "cache_dir") config.cache_dir = resolve(base_dir, value);
            else if (key == "out_dir") config.out_dir = resolve(base_dir, value);
            else if (key == "log_level") config.log_level = value;
            else if (key == "threads")
                config.threads = static_cast<unsigned>(parse_u64(key, value));
            else throw Error("config: unknown key '" + key + "' in [run]");
        } else {
            throw Error("config line " + std::to_string(line_no) +
                        ": key outside of any section");
        }
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    const std::string text = read_file(path);
    const std::string base = std::filesystem::path(path).parent_path().string();
    return parse_config(text, base);
}

void validate_config(const RunConfig& config) {
    if (config.lmax < 1) throw Error("config: lmax must be >= 1");
    if (config.capacity < 1) throw Error("config: capacity must be >= 1");
    if (config.k_min < 2) throw Error("config: k_min must be >= 2");
    if (config.k_max < config.k_min) throw Error("config: k_max must be >= k_min");
    if (!(config.fuzziness > 1.0)) throw Error("config: fuzziness must be > 1");
    if (!(config.tolerance > 0.0)) throw Error("config: tolerance must be > 0");
    if (config.max_iterations < 1) throw Error("config: max_iterations must be >= 1");
    if (config.max_depth < 1) throw Error("config: max_depth must be >= 1");
    parse_log_level(config.log_level);
}

std::vector<std::pair<std::string, std::string>> config_snapshot(const RunConfig& config) {
    std::vector<std::pair<std::string, std::string>> snap;
    std::string inputs;
    for (const auto& in : config.inputs) {
        if (!inputs.empty()) inputs += ";";
        inputs += in.path;
        if (!in.dataset.empty()) inputs += "=" + in.dataset;
    }
    snap.emplace_back("inputs", inputs);
    std::string blocklist;
    for (const auto& b : config.predicate_blocklist) {
        if (!blocklist.empty()) blocklist += ";";
        blocklist += b;
    }
    snap.emplace_back("predicate_blocklist", blocklist);
    snap.emplace_back("malformed_policy",
                      config.malformed_policy == MalformedPolicy::Skip ? "skip" : "strict");
    snap.emplace_back("lmax", std::to_string(config.lmax));
    snap.emplace_back("capacity", std::to_string(config.capacity));
    snap.emplace_back("k_min", std::to_string(config.k_min));
    snap.emplace_back("k_max", std::to_string(config.k_max));
    std::ostringstream fz;
    fz << config.fuzziness;
    snap.emplace_back("fuzziness", fz.str());
    std::ostringstream tol;
    tol << config.tolerance;
    snap.emplace_back("tolerance", tol.str());
    snap.emplace_back("max_iterations", std::to_string(config.max_iterations));
    snap.emplace_back("seed", std::to_string(config.seed));
    snap.emplace_back("max_depth", std::to_string(config.max_depth));
    snap.emplace_back("recompute_per_node", config.recompute_per_node ? "true" : "false");
    return snap;
}

}  // namespace kgpart
