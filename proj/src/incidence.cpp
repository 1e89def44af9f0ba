#include "kgpart/incidence.hpp"

#include <algorithm>

#include "kgpart/error.hpp"

namespace kgpart {

const std::string& IncidenceIndex::iri(PredIndex p) const {
    if (p >= predicates.size() || interner == nullptr)
        throw std::out_of_range("unknown predicate index " + std::to_string(p));
    return interner->term(predicates[p]).lexical;
}

IncidenceIndex build_incidence(const std::vector<Triple>& triples,
                               const TermInterner& interner) {
    IncidenceIndex index;
    index.interner = &interner;

    std::unordered_map<TermId, std::uint64_t> counts;
    for (const Triple& t : triples) ++counts[t.predicate];

    index.predicates.reserve(counts.size());
    for (const auto& [pred, n] : counts) index.predicates.push_back(pred);
    std::sort(index.predicates.begin(), index.predicates.end(),
              [&](TermId a, TermId b) { return interner.term(a).lexical < interner.term(b).lexical; });

    index.predicate_index.reserve(index.predicates.size());
    index.triple_count.resize(index.predicates.size());
    for (PredIndex i = 0; i < index.predicates.size(); ++i) {
        index.predicate_index.emplace(index.predicates[i], i);
        index.triple_count[i] = counts[index.predicates[i]];
        index.total_triples += index.triple_count[i];
    }

    index.neighbors.resize(index.predicates.size());
    for (const Triple& t : triples) {
        const PredIndex p = index.predicate_index.at(t.predicate);
        index.neighbors[p].push_back(t.subject);
        index.neighbors[p].push_back(t.object);
    }
    for (PredIndex p = 0; p < index.neighbors.size(); ++p) {
        auto& set = index.neighbors[p];
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (TermId e : set) index.entity_predicates[e].push_back(p);
    }
    // entity_predicates lists come out sorted because p runs ascending
    return index;
}

}  // namespace kgpart
