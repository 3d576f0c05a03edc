#ifndef MARKUP_BASELINES_HPP
#define MARKUP_BASELINES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markup/dataset.hpp"
#include "markup/features.hpp"
#include "markup/rng.hpp"

namespace markup {

// --- Random ---------------------------------------------------------------

// Uniform draw over the class list.
std::string predict_random(const std::vector<std::string>& classes, Rng& rng);

// --- SD-Type over outgoing statements -------------------------------------

struct SDTypeStatistics {
    std::vector<std::string> classes;
    // per feature key: P(class | key), indexed like `classes`; sums to 1
    std::map<std::string, std::vector<double>> conditional;
    // per feature key: sum of squared deviations from the uniform distribution
    std::map<std::string, double> weight;
    std::vector<double> prior;  // class priors, fallback for unseen nodes
};

// Conditional class distributions per distinct predicate key (set semantics:
// a key counts once per node no matter how often it repeats).
SDTypeStatistics train_sdtype(const std::vector<LabeledInstance>& train, const Vocabulary& vocab,
                              const TaskSpec& task);

// argmax over classes of sum_p weight(p) * P(class | p) over the node's
// distinct keys; nodes with no known key fall back to the prior argmax.
std::string predict_sdtype(const SDTypeStatistics& stats, const NodeRecord& node,
                           const Vocabulary& vocab, const TaskSpec& task,
                           std::vector<double>* scores = nullptr);

// --- KG-B entity linking --------------------------------------------------

struct LinkingClientConfig {
    std::string endpoint;            // e.g. http://localhost:2222/rest/candidates
    double confidence = 0.5;         // acceptance threshold
    std::map<std::string, std::string> language_models;  // lang tag -> model, else English
    std::vector<std::string> accepted_types;             // per task
    int timeout_seconds = 10;
    std::string fixture_path;        // non-empty: offline mode, no network
    int retries = 2;
};

LinkingClientConfig default_linking_config();

struct LinkingCandidate {
    std::string uri;
    std::vector<std::string> types;
    double similarity_score = 0.0;
};

struct KgbPrediction {
    std::string label;          // accepted class or "Other"
    bool accepted = false;      // counted as correct under the generous scheme
    bool no_name = false;       // node had no s:name literal
    std::string matched_uri;
};

// Looks up the node's s:name at the linking endpoint (or in the fixture map)
// and accepts the highest-confidence candidate at or above the threshold
// whose type list intersects the accepted types. Everything else is "Other".
// Throws on transport errors when online.
KgbPrediction kgb_classify(const NodeRecord& node, const LinkingClientConfig& config,
                           const std::string& accepted_label);

struct KgbBatchReport {
    std::vector<KgbPrediction> predictions;
    uint64_t skipped = 0;  // requests that failed after retries
};

KgbBatchReport kgb_classify_batch(const std::vector<NodeRecord>& nodes,
                                  const LinkingClientConfig& config,
                                  const std::string& accepted_label);

// Exposed for tests: parse a candidates response body.
std::vector<LinkingCandidate> parse_candidates(const std::string& body);

}  // namespace markup

#endif
