#pragma once

#include <cstdint>
#include <string>

#include "kgpart/util/hash.hpp"

namespace kgpart {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// One RDF term. For IRIs `lexical` is the absolute IRI, for blank nodes the
// label (without "_:"), for literals the decoded lexical form with an
// optional datatype IRI and language tag. Two terms are equal iff the kind
// and every lexical component are byte-equal.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string lexical;
    std::string datatype;  // literals only, empty if none
    std::string lang;      // literals only, empty if none

    bool operator==(const Term& o) const {
        return kind == o.kind && lexical == o.lexical && datatype == o.datatype &&
               lang == o.lang;
    }

    static Term iri(std::string value) { return {TermKind::Iri, std::move(value), {}, {}}; }
    static Term blank(std::string label) {
        return {TermKind::BlankNode, std::move(label), {}, {}};
    }
    static Term literal(std::string value, std::string datatype = {}, std::string lang = {}) {
        return {TermKind::Literal, std::move(value), std::move(datatype), std::move(lang)};
    }
};

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::uint64_t h = fnv1a64(t.lexical);
        h = fnv1a64(t.datatype, h);
        h = fnv1a64(t.lang, h);
        h ^= static_cast<std::uint64_t>(t.kind) + 0x9e3779b97f4a7c15ull;
        return static_cast<std::size_t>(splitmix64(h));
    }
};

// Dense ids assigned by the interner; stable for one pipeline run.
using TermId = std::uint32_t;
inline constexpr TermId kInvalidTermId = 0xffffffffu;

// Index into the corpus dataset-name table.
using DatasetId = std::uint32_t;

struct Triple {
    TermId subject = kInvalidTermId;
    TermId predicate = kInvalidTermId;
    TermId object = kInvalidTermId;
    DatasetId dataset = 0;

    bool operator==(const Triple& o) const {
        return subject == o.subject && predicate == o.predicate && object == o.object &&
               dataset == o.dataset;
    }
};

// Well-known namespace prefixes (default built-in predicate blocklist).
inline constexpr const char* kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kOwlNamespace = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

}  // namespace kgpart
