#pragma once

#include <istream>
#include <memory>
#include <string>

namespace kgpart {

// Opens a file for line-oriented reading. Gzip-compressed inputs are
// decompressed transparently (zlib passes plain files through unchanged).
// Throws kgpart::Error if the file cannot be opened.
std::unique_ptr<std::istream> open_text_input(const std::string& path);

// Writes `data` gzip-compressed to `path` (test fixtures, cache helpers).
void write_gzip_file(const std::string& path, const std::string& data);

}  // namespace kgpart
