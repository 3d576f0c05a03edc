#include "markup/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace markup {

TaskSpec task_for(const std::string& task_name) {
    if (task_name == "events") return TaskSpec::events();
    const std::string prefix = "genre:";
    if (task_name.rfind(prefix, 0) == 0)
        return TaskSpec::movie_genre(task_name.substr(prefix.size()));
    throw std::runtime_error("unknown task: " + task_name);
}

namespace {

TrainData featurize_side(const std::vector<LabeledInstance>& instances,
                         const FeatureSpace& space, const Standardizer& standardizer,
                         const std::map<std::string, int>& class_index, const Vocabulary& vocab) {
    TrainData data;
    data.n_classes = class_index.size();
    for (const auto& inst : instances) {
        auto it = class_index.find(inst.label);
        if (it == class_index.end())
            throw std::runtime_error("instance label outside the class list: " + inst.label);
        data.labels.push_back(it->second);
        data.rows.push_back(standardizer.apply(featurize(inst, space, vocab)));
    }
    return data;
}

}  // namespace

FeaturizedSplit featurize_split(const DatasetSplit& split, const std::vector<std::string>& classes,
                                const Vocabulary& vocab, const TaskSpec& task) {
    FeaturizedSplit fs;
    fs.classes = classes;
    fs.space = build_feature_space(split.train, vocab, task);

    std::vector<FeatureVector> train_vectors;
    for (const auto& inst : split.train) train_vectors.push_back(featurize(inst, fs.space, vocab));
    fs.standardizer = fit_standardizer(train_vectors);

    std::map<std::string, int> class_index;
    for (size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = int(i);

    fs.train.n_classes = classes.size();
    for (size_t i = 0; i < split.train.size(); ++i) {
        auto it = class_index.find(split.train[i].label);
        if (it == class_index.end())
            throw std::runtime_error("instance label outside the class list: " +
                                     split.train[i].label);
        fs.train.labels.push_back(it->second);
        fs.train.rows.push_back(fs.standardizer.apply(train_vectors[i]));
    }
    fs.test = featurize_side(split.test, fs.space, fs.standardizer, class_index, vocab);
    fs.test_instances = split.test;
    return fs;
}

Model fit_model(const std::string& algorithm, const std::map<std::string, std::string>& hyper,
                const FeaturizedSplit& fs, uint64_t seed, const std::string& dataset_id,
                const std::string& vocab_version) {
    Model model;
    model.algorithm = algorithm;
    model.hyperparameters = hyper;
    model.classes = fs.classes;
    model.space = fs.space;
    model.standardizer = fs.standardizer;
    model.params = train_algorithm(algorithm, fs.train, hyper, seed);
    model.provenance = {seed, dataset_id, vocab_version};
    return model;
}

EvaluationReport evaluate_model(const Model& model, const TrainData& test,
                                const std::vector<std::string>& classes) {
    std::vector<int> predictions;
    for (const auto& row : test.rows) predictions.push_back(model.predict(row));
    return evaluate(predictions, test.labels, classes);
}

std::vector<double> model_row(const Model& model, const LabeledInstance& instance,
                              const Vocabulary& vocab) {
    return model.standardizer.apply(featurize(instance, model.space, vocab));
}

std::string text_hash(const std::string& text) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string content_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for hashing: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return text_hash(buf.str());
}

}  // namespace markup
