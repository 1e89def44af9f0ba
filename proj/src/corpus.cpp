#include "kgpart/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "kgpart/error.hpp"
#include "kgpart/gzip.hpp"
#include "kgpart/util/hash.hpp"
#include "kgpart/util/parallel.hpp"

namespace kgpart {

DatasetId TripleStore::add_dataset(const std::string& name) {
    if (name.empty()) throw Error("dataset tag must be non-empty");
    for (DatasetId i = 0; i < dataset_names_.size(); ++i)
        if (dataset_names_[i] == name) return i;
    dataset_names_.push_back(name);
    return static_cast<DatasetId>(dataset_names_.size() - 1);
}

ParseStats TripleStore::load_stream(std::istream& in, const std::string& dataset,
                                    MalformedPolicy policy) {
    const DatasetId id = add_dataset(dataset);
    ParseStats stats = parse_ntriples(in, interner_, id, policy,
                                      [this](const Triple& t) { triples_.push_back(t); });
    per_file_stats_.push_back(stats);
    return stats;
}

ParseStats TripleStore::load_file(const InputSpec& input, MalformedPolicy policy) {
    const std::string name =
        input.dataset.empty() ? dataset_name_from_path(input.path) : input.dataset;
    auto in = open_text_input(input.path);
    return load_stream(*in, name, policy);
}

void TripleStore::load_files(const std::vector<InputSpec>& inputs, MalformedPolicy policy,
                             unsigned threads) {
    // Parse concurrently into per-file buffers (the interner is shared and
    // thread safe), then append in input order so triple order is stable.
    std::vector<DatasetId> ids(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& input = inputs[i];
        ids[i] = add_dataset(input.dataset.empty() ? dataset_name_from_path(input.path)
                                                   : input.dataset);
    }
    std::vector<std::vector<Triple>> buffers(inputs.size());
    std::vector<ParseStats> stats(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    parallel_for(inputs.size(), threads, [&](std::size_t i) {
        try {
            auto in = open_text_input(inputs[i].path);
            stats[i] = parse_ntriples(*in, interner_, ids[i], policy,
                                      [&buffers, i](const Triple& t) { buffers[i].push_back(t); });
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        triples_.insert(triples_.end(), buffers[i].begin(), buffers[i].end());
        per_file_stats_.push_back(stats[i]);
    }
}

std::uint64_t TripleStore::malformed_total() const {
    std::uint64_t n = 0;
    for (const auto& s : per_file_stats_) n += s.malformed;
    return n;
}

std::string dataset_name_from_path(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    for (const char* suffix : {".gz", ".nt", ".ntriples"}) {
        if (name.size() > std::strlen(suffix) &&
            name.compare(name.size() - std::strlen(suffix), std::string::npos, suffix) == 0)
            name.resize(name.size() - std::strlen(suffix));
    }
    return name.empty() ? "input" : name;
}

namespace {

struct SchemaSignature {
    std::array<std::uint32_t, 3> v;
    bool operator==(const SchemaSignature& o) const { return v == o.v; }
};

struct SchemaSignatureHash {
    std::size_t operator()(const SchemaSignature& s) const {
        return static_cast<std::size_t>(fnv1a64(s.v.data(), sizeof(s.v)));
    }
};

using SchemaSet = std::unordered_set<SchemaSignature, SchemaSignatureHash>;

constexpr TermId kUntypedClass = kInvalidTermId;

// node -> class TermId; when a node has several rdf:type objects the one
// with the smallest serialized form wins, for run-to-run stability.
std::unordered_map<TermId, TermId> build_type_map(const std::vector<Triple>& triples,
                                                  const TermInterner& interner) {
    std::unordered_map<TermId, TermId> classes;
    for (const Triple& t : triples) {
        const Term& p = interner.term(t.predicate);
        if (p.kind != TermKind::Iri || p.lexical != kRdfType) continue;
        auto [it, inserted] = classes.emplace(t.subject, t.object);
        if (!inserted && it->second != t.object) {
            const std::string current = term_to_ntriples(interner.term(it->second));
            const std::string candidate = term_to_ntriples(interner.term(t.object));
            if (candidate < current) it->second = t.object;
        }
    }
    return classes;
}

DatasetStats finalize(std::uint64_t triple_count,
                      const std::unordered_set<TermId>& predicates,
                      const std::unordered_set<TermId>& entities, const SchemaSet& schemas) {
    DatasetStats out;
    out.triple_count = triple_count;
    out.unique_predicates = predicates.size();
    out.unique_entities = entities.size();
    out.unique_triple_schemas = schemas.size();
    return out;
}

}  // namespace

CorpusStats corpus_stats(const std::vector<Triple>& triples, const TermInterner& interner,
                         const std::vector<std::string>& dataset_names) {
    const auto type_map = build_type_map(triples, interner);
    auto class_of = [&](TermId node) {
        auto it = type_map.find(node);
        return it == type_map.end() ? kUntypedClass : it->second;
    };

    std::unordered_set<TermId> all_predicates, all_entities;
    SchemaSet all_schemas;
    std::uint64_t all_triples = 0;

    struct PerDataset {
        std::uint64_t triples = 0;
        std::unordered_set<TermId> predicates, entities;
        SchemaSet schemas;
    };
    std::vector<PerDataset> per(dataset_names.size());

    for (const Triple& t : triples) {
        const SchemaSignature sig{{class_of(t.subject), t.predicate, class_of(t.object)}};
        ++all_triples;
        all_predicates.insert(t.predicate);
        all_entities.insert(t.subject);
        all_entities.insert(t.object);
        all_schemas.insert(sig);
        if (t.dataset >= per.size()) throw Error("triple references unknown dataset");
        PerDataset& d = per[t.dataset];
        ++d.triples;
        d.predicates.insert(t.predicate);
        d.entities.insert(t.subject);
        d.entities.insert(t.object);
        d.schemas.insert(sig);
    }

    CorpusStats stats;
    stats.total = finalize(all_triples, all_predicates, all_entities, all_schemas);
    for (std::size_t i = 0; i < per.size(); ++i) {
        stats.per_dataset[dataset_names[i]] =
            finalize(per[i].triples, per[i].predicates, per[i].entities, per[i].schemas);
    }
    return stats;
}

FilterResult filter_builtin_predicates(const std::vector<Triple>& triples,
                                       const TermInterner& interner,
                                       const std::vector<std::string>& blocklist) {
    // Resolve each distinct predicate id once.
    std::unordered_map<TermId, bool> blocked;
    auto is_blocked = [&](TermId pred) {
        auto it = blocked.find(pred);
        if (it != blocked.end()) return it->second;
        const std::string& iri = interner.term(pred).lexical;
        bool hit = false;
        for (const auto& entry : blocklist) {
            if (iri.size() >= entry.size() && iri.compare(0, entry.size(), entry) == 0) {
                hit = true;
                break;
            }
        }
        blocked.emplace(pred, hit);
        return hit;
    };

    FilterResult out;
    std::unordered_set<TermId> before, after;
    out.triples.reserve(triples.size());
    for (const Triple& t : triples) {
        before.insert(t.predicate);
        if (is_blocked(t.predicate)) {
            ++out.removed_triples;
            continue;
        }
        after.insert(t.predicate);
        out.triples.push_back(t);
    }
    out.predicates_before = before.size();
    out.predicates_after = after.size();
    return out;
}

std::vector<std::string> default_predicate_blocklist() {
    return {kRdfNamespace, kRdfsNamespace, kOwlNamespace};
}

namespace {

nlohmann::json dataset_stats_json(const DatasetStats& s) {
    return {{"triples", s.triple_count},
            {"unique_predicates", s.unique_predicates},
            {"unique_entities", s.unique_entities},
            {"unique_triple_schemas", s.unique_triple_schemas}};
}

}  // namespace

std::string stats_to_json(const CorpusStats& stats) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["total"] = dataset_stats_json(stats.total);
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [name, s] : stats.per_dataset) per[name] = dataset_stats_json(s);
    j["datasets"] = per;
    return j.dump(2) + "\n";
}

std::string stats_table(const CorpusStats& stats) {
    std::ostringstream out;
    auto row = [&out](const std::string& name, const DatasetStats& s) {
        out << name;
        out << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ');
        out << s.triple_count << '\t' << s.unique_triple_schemas << '\t' << s.unique_predicates
            << '\t' << s.unique_entities << '\n';
    };
    out << "Dataset                 Triples\tSchemas\tPredicates\tEntities\n";
    for (const auto& [name, s] : stats.per_dataset) row(name, s);
    row("total", stats.total);
    return out.str();
}

}  // namespace kgpart
