#include "markup/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace markup {

TaskSpec TaskSpec::events() {
    return {"events", "http://schema.org/Event", ""};
}

TaskSpec TaskSpec::movie_genre(const std::string& genre_label) {
    return {"genre:" + genre_label, "http://schema.org/Movie", "http://schema.org/genre"};
}

namespace {

// The type under which a node's plain predicates are keyed: the task root if
// the node is typed with it (or a subtype), otherwise its first declared
// vocabulary type.
std::string node_key_type(const NodeRecord& node, const Vocabulary& vocab,
                          const TaskSpec& task) {
    std::string first_type;
    for (const auto& t : node.type_iris()) {
        auto canon = vocab.canonical_type(t);
        if (!canon) continue;
        if (vocab.is_subtype(*canon, task.root_type)) return task.root_type;
        if (first_type.empty()) first_type = *canon;
    }
    return first_type;
}

bool is_target_property(const std::string& prop_iri, const TaskSpec& task) {
    return !task.target_predicate.empty() && prop_iri == task.target_predicate;
}

}  // namespace

std::string feature_key(const std::string& predicate, const NodeRecord& node,
                        const Vocabulary& vocab, const TaskSpec& task) {
    if (predicate == kRdfType) return "rdf:type";
    const std::string ns = kSchemaPrefix;
    if (predicate.rfind(ns, 0) != 0) return {};

    // composite "<Type>/<prop>" keeps its form, with the embedded type
    // generalized to the task root when it is a subtype of it
    size_t last = predicate.find_last_of('/');
    if (last >= ns.size()) {
        std::string type_part = predicate.substr(0, last);
        std::string prop_local = predicate.substr(last + 1);
        if (vocab.has_type(type_part) && vocab.has_property(ns + prop_local)) {
            if (is_target_property(ns + prop_local, task)) return {};
            std::string type_out = vocab.is_subtype(type_part, task.root_type)
                                       ? task.root_type
                                       : type_part;
            return type_out + "/" + prop_local;
        }
    }

    // plain predicate, keyed under the owning node's type when it has one
    if (!vocab.has_property(predicate)) return {};
    if (is_target_property(predicate, task)) return {};
    std::string key_type = node_key_type(node, vocab, task);
    if (key_type.empty()) return predicate;
    return key_type + "/" + Vocabulary::local_name(predicate);
}

std::vector<std::string> node_feature_keys(const NodeRecord& node, const Vocabulary& vocab,
                                           const TaskSpec& task) {
    std::set<std::string> keys;
    for (const auto& [p, o] : node.statements) {
        std::string key = feature_key(p, node, vocab, task);
        if (!key.empty()) keys.insert(key);
    }
    return {keys.begin(), keys.end()};
}

std::map<std::string, double> node_vocab_counts(const NodeRecord& node, const Vocabulary& vocab,
                                                const TaskSpec& task) {
    std::map<std::string, double> counts;
    for (const auto& [p, o] : node.statements) {
        std::string key = feature_key(p, node, vocab, task);
        if (!key.empty()) counts[key] += 1.0;
    }
    return counts;
}

std::map<std::string, double> page_vocab_counts(const Page& page, const Vocabulary& vocab,
                                                const TaskSpec& task) {
    std::map<std::string, double> counts;
    for (const auto& node : page.nodes)
        for (const auto& [key, c] : node_vocab_counts(node, vocab, task)) counts[key] += c;
    return counts;
}

FeatureSpace build_feature_space(const std::vector<LabeledInstance>& train,
                                 const Vocabulary& vocab, const TaskSpec& task) {
    if (train.empty()) throw std::runtime_error("cannot build a feature space from no instances");
    std::set<std::string> plds, tlds, terms;
    std::set<const Page*> seen_pages;
    for (const auto& inst : train) {
        plds.insert(inst.node.pld);
        if (!inst.node.tld.empty()) tlds.insert(inst.node.tld);
        if (inst.page && seen_pages.insert(inst.page.get()).second) {
            for (const auto& [key, c] : page_vocab_counts(*inst.page, vocab, task))
                terms.insert(key);
        }
        for (const auto& [key, c] : node_vocab_counts(inst.node, vocab, task)) terms.insert(key);
    }
    FeatureSpace space;
    space.task = task;
    size_t dim = 0;
    space.pld_offset = dim;
    for (const auto& p : plds) space.pld_index[p] = dim++;
    space.tld_offset = dim;
    for (const auto& t : tlds) space.tld_index[t] = dim++;
    space.node_vocab_offset = dim;
    for (const auto& t : terms) space.term_index[t] = dim++;
    space.page_vocab_offset = dim;
    dim += terms.size();
    space.dimension = dim;
    return space;
}

namespace {

// Projects key counts onto the term dictionary at the given block offset,
// L2-normalizing the block. Unknown keys are ignored.
void append_vocab_block(const std::map<std::string, double>& counts, const FeatureSpace& space,
                        size_t block_offset, FeatureVector& out) {
    double norm_sq = 0.0;
    std::vector<std::pair<size_t, double>> entries;
    for (const auto& [key, c] : counts) {
        auto it = space.term_index.find(key);
        if (it == space.term_index.end()) continue;
        size_t dim_in_block = it->second - space.node_vocab_offset;
        entries.emplace_back(block_offset + dim_in_block, c);
        norm_sq += c * c;
    }
    if (norm_sq <= 0.0) return;
    double norm = std::sqrt(norm_sq);
    for (auto& [i, v] : entries) out.values.emplace_back(i, v / norm);
}

std::vector<double> project_block(const std::map<std::string, double>& counts,
                                  const FeatureSpace& space) {
    FeatureVector tmp;
    append_vocab_block(counts, space, 0, tmp);
    std::vector<double> dense(space.term_index.size(), 0.0);
    for (const auto& [i, v] : tmp.values) dense[i] = v;
    return dense;
}

}  // namespace

std::vector<double> node_vocab_vector(const NodeRecord& node, const FeatureSpace& space,
                                      const Vocabulary& vocab) {
    return project_block(node_vocab_counts(node, vocab, space.task), space);
}

std::vector<double> page_vocab_vector(const Page& page, const FeatureSpace& space,
                                      const Vocabulary& vocab) {
    return project_block(page_vocab_counts(page, vocab, space.task), space);
}

FeatureVector featurize(const LabeledInstance& instance, const FeatureSpace& space,
                        const Vocabulary& vocab) {
    FeatureVector v;
    v.dimension = space.dimension;
    auto pit = space.pld_index.find(instance.node.pld);
    if (pit != space.pld_index.end()) v.values.emplace_back(pit->second, 1.0);
    auto tit = space.tld_index.find(instance.node.tld);
    if (tit != space.tld_index.end()) v.values.emplace_back(tit->second, 1.0);
    append_vocab_block(node_vocab_counts(instance.node, vocab, space.task), space,
                       space.node_vocab_offset, v);
    if (instance.page)
        append_vocab_block(page_vocab_counts(*instance.page, vocab, space.task), space,
                           space.page_vocab_offset, v);
    std::sort(v.values.begin(), v.values.end());
    return v;
}

std::vector<double> FeatureVector::dense() const {
    std::vector<double> out(dimension, 0.0);
    for (const auto& [i, v] : values) out[i] = v;
    return out;
}

Standardizer fit_standardizer(const std::vector<FeatureVector>& train) {
    if (train.empty()) throw std::runtime_error("cannot fit a standardizer on no vectors");
    size_t dim = train.front().dimension;
    std::vector<double> sum(dim, 0.0), sum_sq(dim, 0.0);
    for (const auto& v : train) {
        if (v.dimension != dim) throw std::runtime_error("feature vector dimension mismatch");
        for (const auto& [i, x] : v.values) {
            sum[i] += x;
            sum_sq[i] += x * x;
        }
    }
    Standardizer s;
    s.mean.resize(dim);
    s.stddev.resize(dim);
    double n = double(train.size());
    for (size_t i = 0; i < dim; ++i) {
        s.mean[i] = sum[i] / n;
        double var = sum_sq[i] / n - s.mean[i] * s.mean[i];
        s.stddev[i] = var > 1e-24 ? std::sqrt(var) : 1.0;
    }
    return s;
}

std::vector<double> Standardizer::apply(const FeatureVector& v) const {
    return apply(v.dense());
}

std::vector<double> Standardizer::apply(const std::vector<double>& v) const {
    if (v.size() != mean.size()) throw std::runtime_error("dimension mismatch in standardizer");
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean[i]) / stddev[i];
    return out;
}

}  // namespace markup
