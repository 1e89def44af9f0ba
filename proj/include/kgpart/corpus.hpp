#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgpart/interner.hpp"
#include "kgpart/ntriples.hpp"
#include "kgpart/term.hpp"

namespace kgpart {

struct DatasetStats {
    std::uint64_t triple_count = 0;
    std::uint64_t unique_predicates = 0;
    std::uint64_t unique_entities = 0;
    std::uint64_t unique_triple_schemas = 0;
};

struct CorpusStats {
    DatasetStats total;
    std::map<std::string, DatasetStats> per_dataset;
};

struct InputSpec {
    std::string path;
    std::string dataset;  // defaults to the filename stem when empty
};

// In-memory corpus: interned terms plus the triples of every loaded source,
// tagged by dataset. Loading distinct files may run concurrently; triples
// are appended in input-list order so runs are reproducible.
class TripleStore {
public:
    DatasetId add_dataset(const std::string& name);

    ParseStats load_stream(std::istream& in, const std::string& dataset,
                           MalformedPolicy policy);
    ParseStats load_file(const InputSpec& input, MalformedPolicy policy);
    void load_files(const std::vector<InputSpec>& inputs, MalformedPolicy policy,
                    unsigned threads);

    TermInterner& interner() { return interner_; }
    const TermInterner& interner() const { return interner_; }
    const std::vector<Triple>& triples() const { return triples_; }
    const std::vector<std::string>& dataset_names() const { return dataset_names_; }
    const std::vector<ParseStats>& per_file_stats() const { return per_file_stats_; }
    std::uint64_t malformed_total() const;

private:
    TermInterner interner_;
    std::vector<Triple> triples_;
    std::vector<std::string> dataset_names_;
    std::vector<ParseStats> per_file_stats_;
};

std::string dataset_name_from_path(const std::string& path);

// Exact one-pass distinct counts. A node's class is the object of its
// rdf:type triple when present (smallest serialized form if several), the
// "untyped" sentinel otherwise; schema signatures are
// (subject-class, predicate, object-class).
CorpusStats corpus_stats(const std::vector<Triple>& triples, const TermInterner& interner,
                         const std::vector<std::string>& dataset_names);

struct FilterResult {
    std::vector<Triple> triples;
    std::uint64_t removed_triples = 0;
    std::uint64_t predicates_before = 0;
    std::uint64_t predicates_after = 0;

    std::uint64_t removed_predicates() const { return predicates_before - predicates_after; }
};

// Drops triples whose predicate IRI starts with any blocklist entry (exact
// IRIs are full-length prefixes). Subjects and objects pass through intact.
FilterResult filter_builtin_predicates(const std::vector<Triple>& triples,
                                       const TermInterner& interner,
                                       const std::vector<std::string>& blocklist);

// rdf:, rdfs: and owl: namespaces.
std::vector<std::string> default_predicate_blocklist();

std::string stats_to_json(const CorpusStats& stats);
std::string stats_table(const CorpusStats& stats);

}  // namespace kgpart
