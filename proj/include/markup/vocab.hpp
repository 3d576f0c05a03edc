#ifndef MARKUP_VOCAB_HPP
#define MARKUP_VOCAB_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace markup {

inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kSchemaPrefix = "http://schema.org/";

// Pinned schema.org snapshot: types with parent links, properties with
// declared domains and ranges. Immutable after load.
class Vocabulary {
public:
    // Snapshot format:
    //   {"version": str,
    //    "types": [{"iri": str, "parents": [str]}],
    //    "properties": [{"iri": str, "domain": [str], "range": [str]}]}
    // Fails atomically on hierarchy cycles or duplicate case-insensitive keys.
    static Vocabulary load(const std::string& path);
    static Vocabulary from_json_text(const std::string& text);

    const std::string& version() const { return version_; }

    bool has_type(const std::string& iri) const { return parents_.count(iri) > 0; }
    bool has_property(const std::string& iri) const { return properties_.count(iri) > 0; }

    // Case-insensitive lookup returning the canonical IRI, or nullopt when no
    // vocabulary term matches. Exact-case matches win; otherwise types are
    // preferred over properties (s:Review vs s:review).
    std::optional<std::string> canonical_term(const std::string& raw_iri) const;
    std::optional<std::string> canonical_type(const std::string& raw_iri) const;
    std::optional<std::string> canonical_property(const std::string& raw_iri) const;

    // true iff t1 == t2 or t1 is a transitive descendant of t2. Throws
    // std::runtime_error on unknown types.
    bool is_subtype(const std::string& t1, const std::string& t2) const;

    const std::vector<std::string>& parents(const std::string& type) const;
    std::vector<std::string> subtypes_of(const std::string& type) const;  // proper descendants

    const std::set<std::string>& domain_of(const std::string& property) const;
    const std::set<std::string>& range_of(const std::string& property) const;

    // Local name after the namespace prefix, e.g. "MusicEvent".
    static std::string local_name(const std::string& iri);

private:
    std::string version_;
    std::unordered_map<std::string, std::vector<std::string>> parents_;  // type -> parents
    std::unordered_set<std::string> properties_;
    std::unordered_map<std::string, std::set<std::string>> domain_of_;
    std::unordered_map<std::string, std::set<std::string>> range_of_;
    std::unordered_map<std::string, std::string> canonical_types_;  // lowercase -> canonical
    std::unordered_map<std::string, std::string> canonical_props_;
};

}  // namespace markup

#endif
