#ifndef MARKUP_LEARN_HPP
#define MARKUP_LEARN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "markup/features.hpp"

namespace markup {

// Training data after featurization + standardization: dense rows, labels as
// indices into the class list.
struct TrainData {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    size_t n_classes = 0;
    size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
};

enum class SplitCriterion { Gini, InformationGain };

SplitCriterion parse_criterion(const std::string& name);  // "gini" | "information-gain"
std::string criterion_name(SplitCriterion c);

// --- learned parameters ---------------------------------------------------

struct GnbParams {
    std::vector<double> log_prior;                // per class
    std::vector<std::vector<double>> mean;        // [class][dim]
    std::vector<std::vector<double>> variance;    // [class][dim], floored
};

struct TreeNode {
    int feature = -1;        // -1 for leaves
    double threshold = 0.0;  // go left when x[feature] <= threshold
    int left = -1;
    int right = -1;
    int leaf_class = -1;
};

struct TreeParams {
    std::vector<TreeNode> nodes;  // node 0 is the root
};

struct ForestParams {
    std::vector<TreeParams> trees;
};

struct SvmParams {
    // one-vs-rest; weights[c] has dim+1 entries, bias last
    std::vector<std::vector<double>> weights;
};

struct ModelProvenance {
    uint64_t seed = 0;
    std::string dataset_id;
    std::string vocab_version;
};

struct Model {
    std::string algorithm;  // gnb | dtree | rforest | svm
    std::map<std::string, std::string> hyperparameters;
    std::vector<std::string> classes;
    FeatureSpace space;
    Standardizer standardizer;
    std::variant<GnbParams, TreeParams, ForestParams, SvmParams> params;
    ModelProvenance provenance;

    // Class index plus optional per-class scores. Ties break by class-list
    // order.
    int predict(const std::vector<double>& x, std::vector<double>* scores = nullptr) const;
    std::string predict_label(const std::vector<double>& x,
                              std::vector<double>* scores = nullptr) const;
};

// --- trainers (learned parameters only; the caller wires up the Model) -----

// Gaussian naive Bayes; variance floored at 1e-9 times the largest pooled
// feature variance. Throws on single-class input.
GnbParams train_gnb(const TrainData& data);

struct TreeOptions {
    SplitCriterion criterion = SplitCriterion::Gini;
    double min_impurity_decrease = 0.0;
    size_t mtry = 0;  // 0: consider every feature
};

TreeParams train_decision_tree(const TrainData& data, const TreeOptions& options,
                               uint64_t seed = 0);

struct ForestOptions {
    TreeOptions tree;
    size_t n_estimators = 10;
    bool bootstrap = true;        // off: every tree sees the full training set
    bool feature_subsample = true;  // on: mtry = ceil(sqrt(dim)) per split
};

ForestParams train_random_forest(const TrainData& data, const ForestOptions& options,
                                 uint64_t seed);

struct SvmOptions {
    double penalty = 1.0;        // [0,5]; 0 is degenerate (regularizer only)
    double tolerance = 1e-4;     // stop when per-epoch objective gain drops below
    size_t max_epochs = 10000;
};

// Returns params plus a degenerate-penalty warning flag.
std::pair<SvmParams, bool> train_linear_svm(const TrainData& data, const SvmOptions& options,
                                            uint64_t seed);

// L2-regularized hinge objective of a one-vs-rest classifier set (used by
// tests and the stopping rule).
double svm_objective(const std::vector<double>& w, const TrainData& data, int positive_class,
                     double penalty);

// --- hyperparameter random search -----------------------------------------

struct SearchTrial {
    std::map<std::string, std::string> params;
    double score = 0.0;  // validation macro F1
};

struct SearchResult {
    std::map<std::string, std::string> best;
    size_t best_trial = 0;
    std::vector<SearchTrial> trials;
};

// Uniform sampling from the per-algorithm ranges; each trial trains on an
// internal 80/20 carve of the training data and scores validation macro F1.
// Ties go to the earliest trial.
SearchResult random_search(const std::string& algorithm, const TrainData& data, size_t n_trials,
                           uint64_t seed);

// Trains the named algorithm with string-encoded hyperparameters.
std::variant<GnbParams, TreeParams, ForestParams, SvmParams> train_algorithm(
    const std::string& algorithm, const TrainData& data,
    const std::map<std::string, std::string>& hyper, uint64_t seed);

// --- model persistence ----------------------------------------------------

// JSON model file, numeric values stored as decimal strings. Throws
// "unknown model version" on bad magic/version.
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);
std::string model_to_json(const Model& model);
Model model_from_json(const std::string& text);

}  // namespace markup

#endif
