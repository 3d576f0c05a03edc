#ifndef MARKUP_CLEANSE_HPP
#define MARKUP_CLEANSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "markup/nquads.hpp"
#include "markup/vocab.hpp"

namespace markup {

struct CleansingReport {
    uint64_t quads_in = 0;
    uint64_t quads_out = 0;
    uint64_t namespace_fixes = 0;
    uint64_t casing_fixes = 0;
    uint64_t dropped_undefined = 0;
    uint64_t flagged_undefined = 0;  // keep-undefined policy only
};

enum class UndefinedPolicy { Drop, Keep };

// Namespace repair for schema.org IRIs: https -> http, junk between "http://"
// and "schema.org" removed, missing slash after the host inserted, host
// lowercased. Other IRIs pass through unchanged.
std::string fix_namespace(const std::string& iri);

// Casing repair against the vocabulary. Composite WDC-style predicates like
// "http://schema.org/Event/name" are fixed partwise: prefix must canonicalize
// to a type, suffix to a property. Returns the repaired IRI or empty when the
// term stays undefined.
std::string fix_casing(const std::string& iri, const Vocabulary& vocab);

// Applies fix_namespace then fix_casing to every schema.org predicate and to
// every rdf:type object in the schema.org namespace. Quads whose predicate or
// typed object stays undefined are dropped (Drop) or passed through (Keep).
std::vector<Quad> cleanse_quads(const std::vector<Quad>& quads, const Vocabulary& vocab,
                                UndefinedPolicy policy, CleansingReport& report);

// true when the IRI lives in (a mangled variant of) the schema.org namespace.
bool is_schema_org(const std::string& iri);

}  // namespace markup

#endif
