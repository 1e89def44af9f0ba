#include "kgpart/ntriples.hpp"

#include <cctype>

namespace kgpart {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct LineScanner {
    const std::string& line;
    std::size_t pos = 0;
    std::string reason;

    explicit LineScanner(const std::string& l) : line(l) {}

    bool eof() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }

    void skip_ws() {
        while (!eof() && is_ws(line[pos])) ++pos;
    }

    bool fail(std::string why) {
        reason = std::move(why);
        return false;
    }

    bool parse_hex(std::size_t count, std::uint32_t& out) {
        out = 0;
        if (pos + count > line.size()) return false;
        for (std::size_t i = 0; i < count; ++i) {
            char c = line[pos + i];
            std::uint32_t v;
            if (c >= '0' && c <= '9') v = static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') v = static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = static_cast<std::uint32_t>(c - 'A' + 10);
            else return false;
            out = (out << 4) | v;
        }
        pos += count;
        return true;
    }

    static void append_utf8(std::string& out, std::uint32_t cp) {
        if (cp <= 0x7f) {
            out.push_back(static_cast<char>(cp));
        } else if (cp <= 0x7ff) {
            out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp <= 0xffff) {
            out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else {
            out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        }
    }

    // <...> with \u / \U escapes; rejects control chars, space and the
    // characters the N-Triples grammar forbids inside IRIREF.
    bool parse_iriref(std::string& out) {
        if (eof() || peek() != '<') return fail("expected '<'");
        ++pos;
        out.clear();
        while (!eof()) {
            char c = line[pos];
            if (c == '>') {
                ++pos;
                if (out.empty()) return fail("empty IRI");
                if (!iri_is_absolute(out)) return fail("relative IRI <" + out + ">");
                return true;
            }
            if (static_cast<unsigned char>(c) <= 0x20 || c == '"' || c == '{' || c == '}' ||
                c == '|' || c == '^' || c == '`')
                return fail("illegal character in IRI");
            if (c == '\\') {
                ++pos;
                if (eof()) return fail("truncated escape in IRI");
                char e = line[pos];
                std::uint32_t cp = 0;
                if (e == 'u') {
                    ++pos;
                    if (!parse_hex(4, cp)) return fail("bad \\u escape in IRI");
                } else if (e == 'U') {
                    ++pos;
                    if (!parse_hex(8, cp)) return fail("bad \\U escape in IRI");
                } else {
                    return fail("illegal escape in IRI");
                }
                append_utf8(out, cp);
                continue;
            }
            out.push_back(c);
            ++pos;
        }
        return fail("unterminated IRI");
    }

    static bool iri_is_absolute(const std::string& iri) {
        // scheme ":" ... with scheme = ALPHA (ALPHA | DIGIT | '+' | '-' | '.')*
        std::size_t i = 0;
        if (i >= iri.size() || !std::isalpha(static_cast<unsigned char>(iri[i]))) return false;
        for (++i; i < iri.size(); ++i) {
            char c = iri[i];
            if (c == ':') return true;
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
                return false;
        }
        return false;
    }

    bool parse_blank_label(std::string& out) {
        // caller consumed "_:"
        out.clear();
        while (!eof()) {
            char c = line[pos];
            if (is_ws(c)) break;
            if (c == '.' && (pos + 1 >= line.size() || is_ws(line[pos + 1]) ||
                             line[pos + 1] == '#'))
                break;  // statement-terminating dot, not part of the label
            out.push_back(c);
            ++pos;
        }
        if (out.empty()) return fail("empty blank node label");
        return true;
    }

    bool parse_string_literal(std::string& out) {
        // caller checked peek() == '"'
        ++pos;
        out.clear();
        while (!eof()) {
            char c = line[pos];
            if (c == '"') {
                ++pos;
                return true;
            }
            if (c == '\\') {
                ++pos;
                if (eof()) return fail("unterminated literal");
                char e = line[pos];
                switch (e) {
                    case 't': out.push_back('\t'); ++pos; break;
                    case 'b': out.push_back('\b'); ++pos; break;
                    case 'n': out.push_back('\n'); ++pos; break;
                    case 'r': out.push_back('\r'); ++pos; break;
                    case 'f': out.push_back('\f'); ++pos; break;
                    case '"': out.push_back('"'); ++pos; break;
                    case '\'': out.push_back('\''); ++pos; break;
                    case '\\': out.push_back('\\'); ++pos; break;
                    case 'u': {
                        ++pos;
                        std::uint32_t cp;
                        if (!parse_hex(4, cp)) return fail("bad \\u escape in literal");
                        append_utf8(out, cp);
                        break;
                    }
                    case 'U': {
                        ++pos;
                        std::uint32_t cp;
                        if (!parse_hex(8, cp)) return fail("bad \\U escape in literal");
                        append_utf8(out, cp);
                        break;
                    }
                    default:
                        return fail("illegal escape in literal");
                }
                continue;
            }
            out.push_back(c);
            ++pos;
        }
        return fail("unterminated literal");
    }

    bool parse_langtag(std::string& out) {
        // caller consumed '@'
        out.clear();
        bool in_first = true;
        while (!eof()) {
            char c = line[pos];
            if (std::isalpha(static_cast<unsigned char>(c)) ||
                (!in_first && std::isdigit(static_cast<unsigned char>(c)))) {
                out.push_back(c);
                ++pos;
            } else if (c == '-' && !out.empty() && out.back() != '-') {
                in_first = false;
                out.push_back(c);
                ++pos;
            } else {
                break;
            }
        }
        if (out.empty() || out.back() == '-') return fail("bad language tag");
        return true;
    }
};

}  // namespace

bool parse_ntriples_line(const std::string& line, Term& subject, Term& predicate,
                         Term& object, std::string& reason) {
    reason.clear();
    LineScanner sc(line);
    sc.skip_ws();
    if (sc.eof() || sc.peek() == '#') return false;  // blank or comment, no statement

    auto bail = [&](const char* fallback) {
        reason = sc.reason.empty() ? fallback : sc.reason;
        return false;
    };

    // subject: IRI or blank node
    if (sc.peek() == '<') {
        std::string iri;
        if (!sc.parse_iriref(iri)) return bail("bad subject");
        subject = Term::iri(std::move(iri));
    } else if (sc.peek() == '_' && sc.pos + 1 < line.size() && line[sc.pos + 1] == ':') {
        sc.pos += 2;
        std::string label;
        if (!sc.parse_blank_label(label)) return bail("bad subject");
        subject = Term::blank(std::move(label));
    } else {
        reason = "expected IRI or blank node subject";
        return false;
    }

    sc.skip_ws();
    if (sc.eof() || sc.peek() != '<') {
        reason = "expected IRI predicate";
        return false;
    }
    {
        std::string iri;
        if (!sc.parse_iriref(iri)) return bail("bad predicate");
        predicate = Term::iri(std::move(iri));
    }

    sc.skip_ws();
    if (sc.eof()) {
        reason = "missing object";
        return false;
    }
    if (sc.peek() == '<') {
        std::string iri;
        if (!sc.parse_iriref(iri)) return bail("bad object");
        object = Term::iri(std::move(iri));
    } else if (sc.peek() == '_' && sc.pos + 1 < line.size() && line[sc.pos + 1] == ':') {
        sc.pos += 2;
        std::string label;
        if (!sc.parse_blank_label(label)) return bail("bad object");
        object = Term::blank(std::move(label));
    } else if (sc.peek() == '"') {
        std::string value, datatype, lang;
        if (!sc.parse_string_literal(value)) return bail("bad literal");
        if (!sc.eof() && sc.peek() == '@') {
            ++sc.pos;
            if (!sc.parse_langtag(lang)) return bail("bad literal");
        } else if (sc.pos + 1 < line.size() && sc.peek() == '^' && line[sc.pos + 1] == '^') {
            sc.pos += 2;
            if (sc.eof() || sc.peek() != '<') {
                reason = "expected datatype IRI";
                return false;
            }
            if (!sc.parse_iriref(datatype)) return bail("bad datatype IRI");
        }
        object = Term::literal(std::move(value), std::move(datatype), std::move(lang));
    } else {
        reason = "expected IRI, blank node or literal object";
        return false;
    }

    sc.skip_ws();
    if (sc.eof() || sc.peek() != '.') {
        reason = "missing terminating '.'";
        return false;
    }
    ++sc.pos;
    sc.skip_ws();
    if (!sc.eof() && sc.peek() != '#') {
        reason = "trailing content after '.'";
        return false;
    }
    return true;
}

ParseStats parse_ntriples(std::istream& in, TermInterner& interner, DatasetId dataset,
                          MalformedPolicy policy, const TripleSink& sink) {
    ParseStats stats;
    std::string line, reason;
    Term s, p, o;
    while (std::getline(in, line)) {
        ++stats.lines;
        if (!parse_ntriples_line(line, s, p, o, reason)) {
            if (reason.empty()) continue;  // blank or comment line
            if (policy == MalformedPolicy::Strict) throw ParseError(stats.lines, reason);
            ++stats.malformed;
            if (stats.issues.size() < kMaxRetainedIssues)
                stats.issues.push_back({stats.lines, reason});
            continue;
        }
        Triple t;
        t.subject = interner.intern(std::move(s));
        t.predicate = interner.intern(std::move(p));
        t.object = interner.intern(std::move(o));
        t.dataset = dataset;
        ++stats.triples;
        sink(t);
    }
    return stats;
}

namespace {

void append_escaped_literal(std::string& out, const std::string& value) {
    for (char c : value) {
        switch (c) {
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\f': out += "\\f"; break;
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            default: out.push_back(c);
        }
    }
}

}  // namespace

std::string term_to_ntriples(const Term& term) {
    std::string out;
    switch (term.kind) {
        case TermKind::Iri:
            out = "<" + term.lexical + ">";
            break;
        case TermKind::BlankNode:
            out = "_:" + term.lexical;
            break;
        case TermKind::Literal:
            out.push_back('"');
            append_escaped_literal(out, term.lexical);
            out.push_back('"');
            if (!term.lang.empty()) {
                out += "@" + term.lang;
            } else if (!term.datatype.empty()) {
                out += "^^<" + term.datatype + ">";
            }
            break;
    }
    return out;
}

std::string triple_to_ntriples(const Term& s, const Term& p, const Term& o) {
    return term_to_ntriples(s) + " " + term_to_ntriples(p) + " " + term_to_ntriples(o) + " .";
}

}  // namespace kgpart
