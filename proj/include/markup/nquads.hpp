#ifndef MARKUP_NQUADS_HPP
#define MARKUP_NQUADS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace markup {

enum class TermKind { Iri, Blank, Literal };

struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;     // IRI, blank label (without _:), or literal lexical form
    std::string lang;      // literal language tag, empty if none
    std::string datatype;  // literal datatype IRI, empty if none

    bool operator==(const Term&) const = default;
};

struct Quad {
    Term subject;  // Iri or Blank
    std::string predicate;
    Term object;
    std::string source_url;  // graph label: the page the statement came from

    bool operator==(const Quad&) const = default;
};

struct ParseReport {
    uint64_t lines = 0;    // non-blank, non-comment statement lines seen
    uint64_t quads = 0;
    uint64_t skipped = 0;  // malformed lines under skip-and-count
};

enum class ErrorPolicy { SkipAndCount, Abort };

class ParseError : public std::runtime_error {
public:
    ParseError(uint64_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    uint64_t line() const { return line_; }

private:
    uint64_t line_;
};

// Parses one N-Quads statement line. Throws ParseError on malformed input.
Quad parse_nquads_line(std::string_view line, uint64_t line_no = 0);

// Canonical N-Quads serialization (used for output and round-trip checks).
std::string to_nquads(const Quad& q);
std::string to_nquads(const Term& t);

// Streaming parse. The callback receives quads in input order. Malformed
// lines are counted (SkipAndCount) or raise ParseError (Abort). Blank lines
// and #-comments are ignored.
ParseReport parse_nquads(std::istream& in, ErrorPolicy policy,
                         const std::function<void(Quad&&)>& sink);

// Convenience: parse a whole stream / file into memory.
std::pair<std::vector<Quad>, ParseReport> parse_nquads(std::istream& in, ErrorPolicy policy);

// Opens a file for reading, transparently decompressing gzip (detected by
// the 1f 8b magic bytes). Throws std::runtime_error on I/O failure.
std::unique_ptr<std::istream> open_quad_stream(const std::string& path);

std::pair<std::vector<Quad>, ParseReport> parse_nquads_file(const std::string& path,
                                                            ErrorPolicy policy);

}  // namespace markup

#endif
