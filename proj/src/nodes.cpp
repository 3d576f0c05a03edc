#include "markup/nodes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

namespace markup {

std::vector<std::string> NodeRecord::type_iris() const {
    std::vector<std::string> out;
    for (const auto& [p, o] : statements)
        if (p == kRdfType && o.kind == TermKind::Iri) out.push_back(o.value);
    return out;
}

std::vector<NodeRecord> assemble_nodes(const std::vector<Quad>& quads,
                                       const PublicSuffixList& psl) {
    std::vector<NodeRecord> nodes;
    std::unordered_map<std::string, size_t> index;
    for (const auto& q : quads) {
        std::string subject = q.subject.kind == TermKind::Blank ? "_:" + q.subject.value
                                                                : q.subject.value;
        std::string key = subject + "\t" + q.source_url;
        auto it = index.find(key);
        if (it == index.end()) {
            NodeRecord n;
            n.subject = subject;
            n.url = q.source_url;
            PldTld d = psl.empty() ? extract_pld_tld_heuristic(q.source_url)
                                   : extract_pld_tld(q.source_url, psl);
            n.pld = d.pld;
            n.tld = d.tld;
            n.domain_flagged = d.flagged;
            it = index.emplace(key, nodes.size()).first;
            nodes.push_back(std::move(n));
        }
        nodes[it->second].statements.emplace_back(q.predicate, q.object);
    }
    return nodes;
}

StatSummary summarize(std::vector<uint64_t> values) {
    StatSummary s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    uint64_t sum = 0;
    for (uint64_t v : values) sum += v;
    s.mean = double(sum) / double(values.size());
    s.median = values[(values.size() - 1) / 2];  // lower median
    return s;
}

CorpusStats profile_corpus(const std::vector<NodeRecord>& nodes, const Vocabulary& vocab,
                           const std::string& type_filter) {
    CorpusStats stats;
    std::vector<uint64_t> quad_counts;
    std::vector<uint64_t> prop_counts;
    for (const auto& n : nodes) {
        bool match = type_filter.empty();
        if (!match) {
            for (const auto& t : n.type_iris()) {
                if (vocab.has_type(t) && vocab.is_subtype(t, type_filter)) {
                    match = true;
                    break;
                }
            }
        }
        if (!match) continue;
        ++stats.total_nodes;
        stats.total_quads += n.statements.size();
        quad_counts.push_back(n.statements.size());
        std::vector<std::string> props;
        for (const auto& [p, o] : n.statements) props.push_back(p);
        std::sort(props.begin(), props.end());
        props.erase(std::unique(props.begin(), props.end()), props.end());
        prop_counts.push_back(props.size());
    }
    stats.quads_per_node = summarize(std::move(quad_counts));
    stats.distinct_properties_per_node = summarize(std::move(prop_counts));
    stats.empty_warning = stats.total_nodes == 0;
    return stats;
}

std::string node_to_jsonl(const NodeRecord& n) {
    nlohmann::json j;
    j["subject"] = n.subject;
    j["url"] = n.url;
    j["pld"] = n.pld;
    j["tld"] = n.tld;
    if (n.domain_flagged) j["domain_flagged"] = true;
    nlohmann::json stmts = nlohmann::json::array();
    for (const auto& [p, o] : n.statements) {
        nlohmann::json s;
        s["p"] = p;
        switch (o.kind) {
            case TermKind::Iri: s["o_kind"] = "iri"; break;
            case TermKind::Blank: s["o_kind"] = "bnode"; break;
            case TermKind::Literal: s["o_kind"] = "literal"; break;
        }
        s["o"] = o.value;
        if (!o.lang.empty()) s["lang"] = o.lang;
        if (!o.datatype.empty()) s["dt"] = o.datatype;
        stmts.push_back(std::move(s));
    }
    j["statements"] = std::move(stmts);
    return j.dump();
}

NodeRecord node_from_jsonl(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    NodeRecord n;
    n.subject = j.at("subject").get<std::string>();
    n.url = j.at("url").get<std::string>();
    n.pld = j.at("pld").get<std::string>();
    n.tld = j.at("tld").get<std::string>();
    n.domain_flagged = j.value("domain_flagged", false);
    for (const auto& s : j.at("statements")) {
        Term o;
        std::string kind = s.at("o_kind").get<std::string>();
        o.kind = kind == "iri" ? TermKind::Iri
                               : kind == "bnode" ? TermKind::Blank : TermKind::Literal;
        o.value = s.at("o").get<std::string>();
        o.lang = s.value("lang", "");
        o.datatype = s.value("dt", "");
        n.statements.emplace_back(s.at("p").get<std::string>(), std::move(o));
    }
    return n;
}

void write_nodes_jsonl(std::ostream& out, const std::vector<NodeRecord>& nodes) {
    for (const auto& n : nodes) out << node_to_jsonl(n) << '\n';
}

std::vector<NodeRecord> read_nodes_jsonl(std::istream& in) {
    std::vector<NodeRecord> nodes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nodes.push_back(node_from_jsonl(line));
    }
    return nodes;
}

}  // namespace markup
