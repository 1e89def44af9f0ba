#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "kgpart/error.hpp"
#include "kgpart/interner.hpp"
#include "kgpart/term.hpp"

namespace kgpart {

enum class MalformedPolicy { Skip, Strict };

struct ParseIssue {
    std::uint64_t line = 0;
    std::string reason;
};

struct ParseStats {
    std::uint64_t lines = 0;
    std::uint64_t triples = 0;
    std::uint64_t malformed = 0;
    std::vector<ParseIssue> issues;  // first few malformed lines, for the run log
};

inline constexpr std::size_t kMaxRetainedIssues = 32;

// Parses a single N-Triples statement line into decoded terms. Returns false
// with `reason` set if the line is malformed; comment / blank lines parse to
// false with an empty reason.
bool parse_ntriples_line(const std::string& line, Term& subject, Term& predicate,
                         Term& object, std::string& reason);

using TripleSink = std::function<void(const Triple&)>;

// Streams statement lines from `in`, interning terms and emitting one Triple
// per well-formed statement in input order. Strict mode throws ParseError on
// the first malformed line; skip mode counts and reports them.
ParseStats parse_ntriples(std::istream& in, TermInterner& interner, DatasetId dataset,
                          MalformedPolicy policy, const TripleSink& sink);

// N-Triples serialization of one term / triple (escapes re-applied).
std::string term_to_ntriples(const Term& term);
std::string triple_to_ntriples(const Term& s, const Term& p, const Term& o);

}  // namespace kgpart
