#ifndef MARKUP_FEATURES_HPP
#define MARKUP_FEATURES_HPP

#include <map>
#include <string>
#include <vector>

#include "markup/dataset.hpp"
#include "markup/vocab.hpp"

namespace markup {

// What is being predicted. root_type generalizes embedded types in feature
// keys so no dimension leaks the label; target_predicate is excluded from
// the dictionaries entirely (movie task: s:genre).
struct TaskSpec {
    std::string name;
    std::string root_type;
    std::string target_predicate;

    static TaskSpec events();
    static TaskSpec movie_genre(const std::string& genre_label);
};

// Frozen dictionaries built from training data only. Dimension layout:
// [pld one-hot | tld one-hot | node-vocab | page-vocab], node-vocab and
// page-vocab sharing one term dictionary.
struct FeatureSpace {
    std::map<std::string, size_t> pld_index;
    std::map<std::string, size_t> tld_index;
    std::map<std::string, size_t> term_index;
    size_t pld_offset = 0;
    size_t tld_offset = 0;
    size_t node_vocab_offset = 0;
    size_t page_vocab_offset = 0;
    size_t dimension = 0;
    TaskSpec task;
};

// Sparse vector of FeatureSpace dimension; indices strictly increasing.
struct FeatureVector {
    std::vector<std::pair<size_t, double>> values;
    size_t dimension = 0;

    std::vector<double> dense() const;
};

// Per-dimension mean/std fit on training vectors (population convention);
// zero-variance dimensions record sigma = 1.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> stddev;

    std::vector<double> apply(const FeatureVector& v) const;
    std::vector<double> apply(const std::vector<double>& v) const;
};

// Feature key for one predicate in the context of its owning node. Empty
// string means the predicate contributes no feature (non-schema.org terms,
// the task's target predicate). rdf:type maps to "rdf:type"; composite and
// plain schema.org predicates become "<Type IRI>/<prop>" with types that are
// subtypes of the task root generalized to the root.
std::string feature_key(const std::string& predicate, const NodeRecord& node,
                        const Vocabulary& vocab, const TaskSpec& task);

// Distinct feature keys of a node's outgoing statements (set semantics).
std::vector<std::string> node_feature_keys(const NodeRecord& node, const Vocabulary& vocab,
                                           const TaskSpec& task);

FeatureSpace build_feature_space(const std::vector<LabeledInstance>& train,
                                 const Vocabulary& vocab, const TaskSpec& task);

// L2-normalized key counts over the node's own statements, projected onto the
// term dictionary. Out-of-dictionary keys are ignored.
std::map<std::string, double> node_vocab_counts(const NodeRecord& node, const Vocabulary& vocab,
                                                const TaskSpec& task);
std::vector<double> node_vocab_vector(const NodeRecord& node, const FeatureSpace& space,
                                      const Vocabulary& vocab);

// Same, pooled over every node on the page (keys per the owning node).
std::map<std::string, double> page_vocab_counts(const Page& page, const Vocabulary& vocab,
                                                const TaskSpec& task);
std::vector<double> page_vocab_vector(const Page& page, const FeatureSpace& space,
                                      const Vocabulary& vocab);

FeatureVector featurize(const LabeledInstance& instance, const FeatureSpace& space,
                        const Vocabulary& vocab);

Standardizer fit_standardizer(const std::vector<FeatureVector>& train);

}  // namespace markup

#endif
