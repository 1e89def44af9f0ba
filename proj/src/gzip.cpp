#include "kgpart/gzip.hpp"

#include <zlib.h>

#include <array>
#include <streambuf>

#include "kgpart/error.hpp"

namespace kgpart {

namespace {

class GzStreamBuf : public std::streambuf {
public:
    explicit GzStreamBuf(const std::string& path) {
        file_ = gzopen(path.c_str(), "rb");
        if (file_ == nullptr) throw Error("cannot open input file: " + path);
        gzbuffer(file_, 1 << 16);
    }

    ~GzStreamBuf() override {
        if (file_ != nullptr) gzclose(file_);
    }

    GzStreamBuf(const GzStreamBuf&) = delete;
    GzStreamBuf& operator=(const GzStreamBuf&) = delete;

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        const int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
        if (n <= 0) return traits_type::eof();
        setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_ = nullptr;
    std::array<char, 1 << 16> buffer_{};
};

class GzInputStream : public std::istream {
public:
    explicit GzInputStream(const std::string& path) : std::istream(nullptr), buf_(path) {
        rdbuf(&buf_);
    }

private:
    GzStreamBuf buf_;
};

}  // namespace

std::unique_ptr<std::istream> open_text_input(const std::string& path) {
    return std::make_unique<GzInputStream>(path);
}

void write_gzip_file(const std::string& path, const std::string& data) {
    gzFile out = gzopen(path.c_str(), "wb");
    if (out == nullptr) throw Error("cannot open output file: " + path);
    if (!data.empty() &&
        gzwrite(out, data.data(), static_cast<unsigned>(data.size())) !=
            static_cast<int>(data.size())) {
        gzclose(out);
        throw Error("gzip write failed: " + path);
    }
    gzclose(out);
}

}  // namespace kgpart
