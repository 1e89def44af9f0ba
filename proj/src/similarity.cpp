#include "kgpart/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "kgpart/error.hpp"
#include "kgpart/util/parallel.hpp"

namespace kgpart {

namespace {

std::size_t intersection_size(const std::vector<TermId>& a, const std::vector<TermId>& b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

void format_double(std::ostringstream& out, double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, r.ptr - buf);
}

}  // namespace

double level1_similarity(PredIndex pi, PredIndex pj, const IncidenceIndex& index) {
    if (pi >= index.size() || pj >= index.size())
        throw std::out_of_range("unknown predicate index");
    const auto& a = index.neighbors[pi];
    const auto& b = index.neighbors[pj];
    if (a.empty() || b.empty()) throw Error("predicate with empty neighbor set");
    const double shared = static_cast<double>(intersection_size(a, b));
    return (shared / static_cast<double>(a.size())) * (shared / static_cast<double>(b.size()));
}

Matrix propagate_similarity(const LevelMatrix& levels, const IncidenceIndex& index,
                            unsigned threads) {
    const std::uint32_t n = levels.n;
    Matrix ps(n, n, 0.0);

    // Level 1: direct scores for projection edges, computed per row so the
    // parallel split stays deterministic.
    parallel_for(n, threads, [&](std::size_t i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (levels.at(static_cast<PredIndex>(i), j) == 1)
                ps.at(i, j) = level1_similarity(static_cast<PredIndex>(i),
                                                static_cast<PredIndex>(j), index);
        }
    });

    // Higher levels in increasing order of m, so every sub-score used by a
    // split is already final.
    for (std::uint32_t m = 2; m <= levels.cap; ++m) {
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (levels.at(i, j) != m) continue;
                double best = 0.0;
                if (m == 2) {
                    for (std::uint32_t k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        if (levels.at(i, k) == 1 && levels.at(k, j) == 1)
                            best = std::max(best, ps.at(i, k) * ps.at(k, j));
                    }
                } else {
                    for (std::uint32_t k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        const std::uint32_t p = levels.at(i, k);
                        const std::uint32_t q = levels.at(k, j);
                        if (p >= 1 && p < m && q >= 1 && q < m && p + q == m)
                            best = std::max(best, std::max(ps.at(i, k), ps.at(k, j)));
                    }
                }
                ps.at(i, j) = best;
                ps.at(j, i) = best;
            }
        }
    }
    return ps;
}

SimilarityMatrix assemble_matrix(const Matrix& scores, const IncidenceIndex& index) {
    const std::uint32_t n = static_cast<std::uint32_t>(index.size());
    if (scores.rows != n || scores.cols != n)
        throw Error("score table shape does not match predicate count");
    SimilarityMatrix cm;
    cm.n = n;
    cm.values = Matrix(n, n, 0.0);
    cm.labels.reserve(n);
    for (PredIndex p = 0; p < n; ++p) cm.labels.push_back(index.iri(p));
    for (std::uint32_t i = 0; i < n; ++i) {
        cm.values.at(i, i) = 1.0;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double v = scores.at(i, j);
            if (v != scores.at(j, i))
                throw Error("asymmetric similarity scores for pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
            if (v < 0.0 || v > 1.0)
                throw Error("similarity score out of [0,1] for pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
            cm.values.at(i, j) = v;
            cm.values.at(j, i) = v;
        }
    }
    return cm;
}

std::string similarity_to_csv(const SimilarityMatrix& cm) {
    std::ostringstream out;
    out << "predicate";
    for (const auto& label : cm.labels) out << ',' << label;
    out << '\n';
    for (std::uint32_t i = 0; i < cm.n; ++i) {
        out << cm.labels[i];
        for (std::uint32_t j = 0; j < cm.n; ++j) {
            out << ',';
            format_double(out, cm.values.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

namespace {
constexpr char kCmMagic[8] = {'K', 'G', 'P', 'C', 'M', '1', '\r', '\n'};
}

void write_similarity_binary(const SimilarityMatrix& cm, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write similarity cache: " + path);
    out.write(kCmMagic, sizeof(kCmMagic));
    const std::uint64_t n = cm.n;
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(cm.values.data.data()),
              static_cast<std::streamsize>(cm.values.data.size() * sizeof(double)));
    if (!out) throw Error("similarity cache write failed: " + path);
}

bool read_similarity_binary(const std::string& path, const std::vector<std::string>& labels,
                            SimilarityMatrix& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kCmMagic, sizeof(magic)) != 0)
        return false;
    std::uint64_t n = 0;
    if (!in.read(reinterpret_cast<char*>(&n), sizeof(n)) || n != labels.size()) return false;
    SimilarityMatrix cm;
    cm.n = static_cast<std::uint32_t>(n);
    cm.labels = labels;
    cm.values = Matrix(cm.n, cm.n, 0.0);
    if (!in.read(reinterpret_cast<char*>(cm.values.data.data()),
                 static_cast<std::streamsize>(cm.values.data.size() * sizeof(double))))
        return false;
    // must be exactly at EOF
    in.get();
    if (!in.eof()) return false;
    out = std::move(cm);
    return true;
}

}  // namespace kgpart
