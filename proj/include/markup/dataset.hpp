#ifndef MARKUP_DATASET_HPP
#define MARKUP_DATASET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "markup/nodes.hpp"
#include "markup/vocab.hpp"

namespace markup {

// All nodes extracted from one page; shared by the instances on that page.
struct Page {
    std::string url;
    std::vector<NodeRecord> nodes;
};

struct LabeledInstance {
    NodeRecord node;
    std::string label;
    std::shared_ptr<const Page> page;  // always contains the node itself
};

enum class SamplingStrategy { Stratified, PldAware };

struct SamplingConfig {
    SamplingStrategy strategy = SamplingStrategy::Stratified;
    std::optional<uint64_t> class_cap;  // unset: size of the smallest class
    uint64_t seed = 0;
    double split_ratio = 0.8;
};

struct DatasetProvenance {
    std::string task;
    std::string strategy;
    uint64_t seed = 0;
    uint64_t class_cap = 0;
    std::string vocab_version;
};

struct LabeledDataset {
    std::vector<std::string> classes;
    std::vector<LabeledInstance> instances;
    DatasetProvenance provenance;
};

struct DatasetSplit {
    std::vector<LabeledInstance> train;
    std::vector<LabeledInstance> test;
    DatasetProvenance provenance;
};

using InstancesByClass = std::map<std::string, std::vector<LabeledInstance>>;

// Groups nodes into shared pages by URL.
std::vector<std::shared_ptr<Page>> build_pages(std::vector<NodeRecord> nodes);

// --- event task -----------------------------------------------------------

struct EventLabelStats {
    uint64_t unlabeled = 0;    // generic s:Event only or no event type
    uint64_t multi_typed = 0;  // skipped: several distinct proper subtypes
};

// k most frequent proper event subtypes (IRIs), by node count on the cleansed
// corpus; ties by IRI.
std::vector<std::string> top_event_subtypes(const std::vector<std::shared_ptr<Page>>& pages,
                                            const Vocabulary& vocab, size_t k);

// Class label for one node: a top-k subtype's local name, "Other" for any
// other proper subtype, nullopt for generic-only or untypable nodes.
// Multi-subtyped nodes yield nullopt and are counted.
std::optional<std::string> label_event_node(const NodeRecord& node, const Vocabulary& vocab,
                                            const std::set<std::string>& top_subtype_iris,
                                            EventLabelStats* stats = nullptr);

InstancesByClass label_events(const std::vector<std::shared_ptr<Page>>& pages,
                              const Vocabulary& vocab, size_t k, EventLabelStats* stats = nullptr);

// Balanced k+1-class dataset (top-k subtypes plus "Other"). Throws when a
// class is smaller than the cap.
LabeledDataset build_event_dataset(const std::vector<std::shared_ptr<Page>>& pages,
                                   const Vocabulary& vocab, size_t k,
                                   const SamplingConfig& config);

// --- movie genre task -----------------------------------------------------

struct GenrePattern {
    std::string label;
    std::vector<std::string> patterns;  // matched case-insensitively as substrings
};

std::vector<GenrePattern> load_genres(const std::string& path);

// Union over all s:genre literals of every genre whose pattern is a
// case-insensitive substring of the literal.
std::set<std::string> label_movie_node(const NodeRecord& node,
                                       const std::vector<GenrePattern>& genres);

// One binary dataset per top-k genre: positives carry the genre, negatives
// ("Other") do not; both classes capped at the smallest class size across all
// datasets. Throws on a genre with zero positives.
std::map<std::string, LabeledDataset> build_genre_datasets(
    const std::vector<std::shared_ptr<Page>>& pages, const std::vector<GenrePattern>& genres,
    size_t k, const SamplingConfig& config);

// --- sampling and splitting ----------------------------------------------

// Exactly cap instances per class, uniform without replacement, deterministic
// per seed. Throws on undersized classes.
std::vector<LabeledInstance> sample_stratified(const InstancesByClass& by_class, uint64_t cap,
                                               uint64_t seed);

// Fair-share sampling: iteratively admits every pld smaller than the fair
// share (remaining needed / remaining plds) in full; when none is, each
// remaining pld contributes floor(fair share) and the residual deficit is
// filled one instance per pld in descending pld-size order (ties by name).
std::vector<LabeledInstance> sample_pld_aware(const InstancesByClass& by_class, uint64_t cap,
                                              uint64_t seed);

// Per-class split with floor(n * ratio) training instances; disjoint by
// node_id; deterministic per seed. Throws on classes with < 2 instances.
DatasetSplit split_train_test(const LabeledDataset& dataset, double ratio, uint64_t seed);

InstancesByClass group_by_class(const std::vector<LabeledInstance>& instances);

// --- persistence ----------------------------------------------------------

// dataset file: provenance header line, then one instance per line with the
// node inline and the page referenced by URL into the sidecar.
void write_dataset(const std::string& dataset_path, const std::string& pages_path,
                   const LabeledDataset& dataset);
LabeledDataset read_dataset(const std::string& dataset_path, const std::string& pages_path);

}  // namespace markup

#endif
