#ifndef MARKUP_NODES_HPP
#define MARKUP_NODES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "markup/domains.hpp"
#include "markup/nquads.hpp"
#include "markup/vocab.hpp"

namespace markup {

// All outgoing statements of one subject on one page. Node identity is the
// (subject label, source URL) pair; blank-node labels are page-scoped.
struct NodeRecord {
    std::string subject;  // IRI or blank label (blank labels prefixed "_:")
    std::string url;
    std::string pld;
    std::string tld;
    bool domain_flagged = false;
    std::vector<std::pair<std::string, Term>> statements;  // (predicate, object), input order

    std::string node_id() const { return subject + "\t" + url; }

    // Objects of rdf:type statements that are IRIs.
    std::vector<std::string> type_iris() const;
};

struct StatSummary {
    uint64_t min = 0;
    uint64_t max = 0;
    double mean = 0.0;
    uint64_t median = 0;  // lower median for even counts
};

struct CorpusStats {
    uint64_t total_quads = 0;
    uint64_t total_nodes = 0;
    StatSummary quads_per_node;
    StatSummary distinct_properties_per_node;
    bool empty_warning = false;  // no node matched the type filter
};

// Groups quads by (subject, source_url), preserving input order of both the
// groups (first occurrence) and the statements within each group. pld/tld
// come from the suffix list; with an empty list the last-two-labels fallback
// is used.
std::vector<NodeRecord> assemble_nodes(const std::vector<Quad>& quads,
                                       const PublicSuffixList& psl);

// Stats over nodes whose rdf:type matches the filter type or one of its
// declared subtypes. Empty filter type matches every node.
CorpusStats profile_corpus(const std::vector<NodeRecord>& nodes, const Vocabulary& vocab,
                           const std::string& type_filter);

// Lower-median summary of a value multiset.
StatSummary summarize(std::vector<uint64_t> values);

// JSONL serialization, one NodeRecord per line:
// {"subject","url","pld","tld","statements":[{"p","o_kind","o","lang"?,"dt"?}]}
std::string node_to_jsonl(const NodeRecord& n);
NodeRecord node_from_jsonl(const std::string& line);

void write_nodes_jsonl(std::ostream& out, const std::vector<NodeRecord>& nodes);
std::vector<NodeRecord> read_nodes_jsonl(std::istream& in);

}  // namespace markup

#endif
