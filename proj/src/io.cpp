#include "kgpart/util/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kgpart/error.hpp"
#include "kgpart/util/hash.hpp"
#include "kgpart/util/log.hpp"

namespace kgpart {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed: " + path);
}

bool file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::exists(path, ec);
}

void ensure_directory(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw Error("cannot create directory " + path + ": " + ec.message());
}

LogLevel& log_threshold() {
    static LogLevel level = LogLevel::Info;
    return level;
}

LogLevel parse_log_level(std::string_view name) {
    if (name == "debug") return LogLevel::Debug;
    if (name == "info") return LogLevel::Info;
    if (name == "warn") return LogLevel::Warn;
    if (name == "error") return LogLevel::Error;
    if (name == "quiet") return LogLevel::Quiet;
    throw Error("unknown log level: " + std::string(name));
}

void log_message(LogLevel level, const std::string& msg) {
    if (level < log_threshold()) return;
    const char* tag = "";
    switch (level) {
        case LogLevel::Debug: tag = "debug"; break;
        case LogLevel::Info: tag = "info"; break;
        case LogLevel::Warn: tag = "warn"; break;
        case LogLevel::Error: tag = "error"; break;
        case LogLevel::Quiet: return;
    }
    std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace kgpart
