#include "markup/cleanse.hpp"

#include <algorithm>
#include <cctype>

namespace markup {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

// Position of "schema.org" inside the authority-ish prefix of the IRI, or
// npos. The match must come before any '/', otherwise schema.org is just a
// path segment of some other host.
size_t schema_org_host_pos(const std::string& lower, size_t after_scheme) {
    size_t pos = lower.find("schema.org", after_scheme);
    if (pos == std::string::npos) return std::string::npos;
    size_t slash = lower.find('/', after_scheme);
    if (slash != std::string::npos && slash < pos) return std::string::npos;
    return pos;
}

size_t scheme_end(const std::string& lower) {
    if (lower.rfind("http://", 0) == 0) return 7;
    if (lower.rfind("https://", 0) == 0) return 8;
    return std::string::npos;
}

}  // namespace

bool is_schema_org(const std::string& iri) {
    std::string lower = to_lower(iri);
    size_t se = scheme_end(lower);
    if (se == std::string::npos) return false;
    return schema_org_host_pos(lower, se) != std::string::npos;
}

std::string fix_namespace(const std::string& iri) {
    std::string lower = to_lower(iri);
    size_t se = scheme_end(lower);
    if (se == std::string::npos) return iri;
    size_t pos = schema_org_host_pos(lower, se);
    if (pos == std::string::npos) return iri;
    std::string rest = iri.substr(pos + 10);  // after "schema.org"
    std::string out = "http://schema.org";
    if (rest.empty() || rest.front() != '/') out.push_back('/');
    out += rest;
    return out;
}

std::string fix_casing(const std::string& iri, const Vocabulary& vocab) {
    if (auto c = vocab.canonical_term(iri)) return *c;
    // composite "http://schema.org/<Type>/<prop>": fix both parts
    const std::string ns = kSchemaPrefix;
    if (iri.rfind(ns, 0) != 0) return {};
    size_t last = iri.find_last_of('/');
    if (last < ns.size()) return {};
    std::string type_part = iri.substr(0, last);
    std::string prop_local = iri.substr(last + 1);
    auto type_canon = vocab.canonical_type(type_part);
    if (!type_canon) return {};
    auto prop_canon = vocab.canonical_property(ns + prop_local);
    if (!prop_canon) return {};
    return *type_canon + "/" + Vocabulary::local_name(*prop_canon);
}

std::vector<Quad> cleanse_quads(const std::vector<Quad>& quads, const Vocabulary& vocab,
                                UndefinedPolicy policy, CleansingReport& report) {
    std::vector<Quad> out;
    out.reserve(quads.size());
    for (const auto& q : quads) {
        Quad fixed = q;
        bool undefined = false;

        if (is_schema_org(fixed.predicate)) {
            std::string ns_fixed = fix_namespace(fixed.predicate);
            if (ns_fixed != fixed.predicate) ++report.namespace_fixes;
            std::string canon = fix_casing(ns_fixed, vocab);
            if (canon.empty()) {
                undefined = true;
                fixed.predicate = ns_fixed;
            } else {
                if (canon != ns_fixed) ++report.casing_fixes;
                fixed.predicate = canon;
            }
        }

        if (fixed.predicate == kRdfType && fixed.object.kind == TermKind::Iri &&
            is_schema_org(fixed.object.value)) {
            std::string ns_fixed = fix_namespace(fixed.object.value);
            if (ns_fixed != fixed.object.value) ++report.namespace_fixes;
            std::string canon = fix_casing(ns_fixed, vocab);
            if (canon.empty()) {
                undefined = true;
                fixed.object.value = ns_fixed;
            } else {
                if (canon != ns_fixed) ++report.casing_fixes;
                fixed.object.value = canon;
            }
        }

        ++report.quads_in;
        if (undefined && policy == UndefinedPolicy::Drop) {
            ++report.dropped_undefined;
            continue;
        }
        if (undefined) ++report.flagged_undefined;
        ++report.quads_out;
        out.push_back(std::move(fixed));
    }
    return out;
}

}  // namespace markup
