#pragma once

#include <string>

namespace kgpart {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
void ensure_directory(const std::string& path);

}  // namespace kgpart
