#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgpart {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input line in strict mode; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::uint64_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::uint64_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::uint64_t line_;
    std::string reason_;
};

// Pipeline failure wrapper; names the stage that failed.
class StageError : public Error {
public:
    StageError(const std::string& stage, const std::string& cause)
        : Error("stage '" + stage + "' failed: " + cause), stage_(stage) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace kgpart
