#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kgpart/interner.hpp"
#include "kgpart/term.hpp"

namespace kgpart {

// Dense index of a predicate within one similarity computation; assigned in
// ascending predicate-IRI order so matrix rows are reproducible.
using PredIndex = std::uint32_t;

// Predicate -> entity neighbourhood map over the filtered corpus, direction
// ignored, plus the entity -> predicate reverse map and per-predicate triple
// counts.
struct IncidenceIndex {
    std::vector<TermId> predicates;  // position = PredIndex, sorted by IRI
    std::unordered_map<TermId, PredIndex> predicate_index;
    std::vector<std::vector<TermId>> neighbors;  // sorted, deduplicated entity ids
    std::unordered_map<TermId, std::vector<PredIndex>> entity_predicates;  // sorted
    std::vector<std::uint64_t> triple_count;  // per predicate
    std::uint64_t total_triples = 0;

    std::size_t size() const { return predicates.size(); }
    const std::string& iri(PredIndex p) const;
    const TermInterner* interner = nullptr;
};

IncidenceIndex build_incidence(const std::vector<Triple>& triples,
                               const TermInterner& interner);

}  // namespace kgpart
