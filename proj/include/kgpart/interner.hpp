#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kgpart/term.hpp"

namespace kgpart {

// Injective Term -> dense id table. Safe for concurrent insertion; lookups
// of already-assigned ids never move (the map owns the terms, the id vector
// holds stable node pointers).
class TermInterner {
public:
    TermInterner() = default;
    TermInterner(const TermInterner&) = delete;
    TermInterner& operator=(const TermInterner&) = delete;

    TermId intern(Term term);

    const Term& term(TermId id) const;
    std::size_t size() const;

    // Approximate retained bytes: table nodes plus heap-allocated string
    // payloads. Used by the ingest scale checks.
    std::size_t memory_footprint() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<Term, TermId, TermHash> ids_;
    std::vector<const Term*> terms_;
};

}  // namespace kgpart
