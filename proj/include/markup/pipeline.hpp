#ifndef MARKUP_PIPELINE_HPP
#define MARKUP_PIPELINE_HPP

#include <string>
#include <vector>

#include "markup/dataset.hpp"
#include "markup/features.hpp"
#include "markup/learn.hpp"
#include "markup/metrics.hpp"

namespace markup {

// Feature space, standardizer, and dense matrices for one train/test split.
// The space and the standardizer are fit on the training side only.
struct FeaturizedSplit {
    std::vector<std::string> classes;
    FeatureSpace space;
    Standardizer standardizer;
    TrainData train;
    TrainData test;
    std::vector<LabeledInstance> test_instances;
};

TaskSpec task_for(const std::string& task_name);

FeaturizedSplit featurize_split(const DatasetSplit& split, const std::vector<std::string>& classes,
                                const Vocabulary& vocab, const TaskSpec& task);

// Trains on the featurized training side and wires up a complete Model.
Model fit_model(const std::string& algorithm, const std::map<std::string, std::string>& hyper,
                const FeaturizedSplit& fs, uint64_t seed, const std::string& dataset_id,
                const std::string& vocab_version);

EvaluationReport evaluate_model(const Model& model, const TrainData& test,
                                const std::vector<std::string>& classes);

// Standardized dense row for one instance under a trained model's space.
std::vector<double> model_row(const Model& model, const LabeledInstance& instance,
                              const Vocabulary& vocab);

// FNV-1a 64 content hash as fixed-width hex; provenance currency.
std::string content_hash(const std::string& path);
std::string text_hash(const std::string& text);

}  // namespace markup

#endif
