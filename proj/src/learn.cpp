#include "markup/learn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "markup/metrics.hpp"
#include "markup/rng.hpp"

namespace markup {

SplitCriterion parse_criterion(const std::string& name) {
    if (name == "gini") return SplitCriterion::Gini;
    if (name == "information-gain" || name == "entropy") return SplitCriterion::InformationGain;
    throw std::runtime_error("unknown split criterion: " + name);
}

std::string criterion_name(SplitCriterion c) {
    return c == SplitCriterion::Gini ? "gini" : "information-gain";
}

// --- Gaussian naive Bayes -------------------------------------------------

GnbParams train_gnb(const TrainData& data) {
    if (data.n_classes < 2) throw std::runtime_error("naive Bayes needs at least 2 classes");
    if (data.rows.empty()) throw std::runtime_error("empty training set");
    size_t d = data.dim();
    size_t k = data.n_classes;
    size_t n = data.rows.size();

    // pooled per-dimension variance sets the variance floor
    std::vector<double> pooled_mean(d, 0.0), pooled_sq(d, 0.0);
    for (const auto& row : data.rows)
        for (size_t j = 0; j < d; ++j) {
            pooled_mean[j] += row[j];
            pooled_sq[j] += row[j] * row[j];
        }
    double max_var = 0.0;
    for (size_t j = 0; j < d; ++j) {
        double m = pooled_mean[j] / double(n);
        max_var = std::max(max_var, pooled_sq[j] / double(n) - m * m);
    }
    double floor = 1e-9 * (max_var > 0.0 ? max_var : 1.0);

    GnbParams p;
    p.log_prior.assign(k, 0.0);
    p.mean.assign(k, std::vector<double>(d, 0.0));
    p.variance.assign(k, std::vector<double>(d, 0.0));
    std::vector<uint64_t> counts(k, 0);
    for (size_t i = 0; i < n; ++i) {
        int c = data.labels[i];
        ++counts[c];
        for (size_t j = 0; j < d; ++j) p.mean[c][j] += data.rows[i][j];
    }
    for (size_t c = 0; c < k; ++c) {
        if (counts[c] == 0) throw std::runtime_error("class without training instances");
        for (size_t j = 0; j < d; ++j) p.mean[c][j] /= double(counts[c]);
        p.log_prior[c] = std::log(double(counts[c]) / double(n));
    }
    for (size_t i = 0; i < n; ++i) {
        int c = data.labels[i];
        for (size_t j = 0; j < d; ++j) {
            double diff = data.rows[i][j] - p.mean[c][j];
            p.variance[c][j] += diff * diff;
        }
    }
    for (size_t c = 0; c < k; ++c)
        for (size_t j = 0; j < d; ++j)
            p.variance[c][j] = std::max(p.variance[c][j] / double(counts[c]), floor);
    return p;
}

namespace {

double gnb_score(const GnbParams& p, int c, const std::vector<double>& x) {
    double score = p.log_prior[c];
    for (size_t j = 0; j < x.size(); ++j) {
        double var = p.variance[c][j];
        double diff = x[j] - p.mean[c][j];
        score += -0.5 * std::log(2.0 * M_PI * var) - diff * diff / (2.0 * var);
    }
    return score;
}

// --- decision tree --------------------------------------------------------

double impurity(const std::vector<uint64_t>& counts, uint64_t n, SplitCriterion crit) {
    if (n == 0) return 0.0;
    double imp = crit == SplitCriterion::Gini ? 1.0 : 0.0;
    for (uint64_t c : counts) {
        if (c == 0) continue;
        double p = double(c) / double(n);
        if (crit == SplitCriterion::Gini) imp -= p * p;
        else imp -= p * std::log2(p);
    }
    return imp;
}

int majority_class(const std::vector<uint64_t>& counts) {
    size_t best = 0;
    for (size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = c;
    return int(best);
}

struct TreeBuilder {
    const TrainData& data;
    TreeOptions opt;
    Rng* rng;  // only used when opt.mtry > 0
    size_t n_total;
    std::vector<TreeNode> nodes;

    std::vector<uint64_t> class_counts(const std::vector<size_t>& idx) const {
        std::vector<uint64_t> counts(data.n_classes, 0);
        for (size_t i : idx) ++counts[data.labels[i]];
        return counts;
    }

    std::vector<size_t> candidate_features() const {
        size_t d = data.dim();
        if (opt.mtry == 0 || opt.mtry >= d) {
            std::vector<size_t> all(d);
            std::iota(all.begin(), all.end(), 0);
            return all;
        }
        std::vector<size_t> pool(d);
        std::iota(pool.begin(), pool.end(), 0);
        for (size_t i = 0; i < opt.mtry; ++i) {
            size_t j = i + rng->below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(opt.mtry);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    int build(const std::vector<size_t>& idx) {
        auto counts = class_counts(idx);
        double node_imp = impurity(counts, idx.size(), opt.criterion);

        int best_feature = -1;
        double best_threshold = 0.0;
        double best_decrease = -1.0;

        if (node_imp > 0.0) {
            double node_weight = double(idx.size()) / double(n_total);
            for (size_t f : candidate_features()) {
                std::vector<std::pair<double, int>> vals;
                vals.reserve(idx.size());
                for (size_t i : idx) vals.emplace_back(data.rows[i][f], data.labels[i]);
                std::sort(vals.begin(), vals.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<uint64_t> left(data.n_classes, 0);
                std::vector<uint64_t> right = counts;
                for (size_t i = 0; i + 1 < vals.size(); ++i) {
                    ++left[vals[i].second];
                    --right[vals[i].second];
                    if (vals[i].first == vals[i + 1].first) continue;
                    double threshold = 0.5 * (vals[i].first + vals[i + 1].first);
                    uint64_t nl = i + 1, nr = vals.size() - nl;
                    double child_imp =
                        double(nl) / double(idx.size()) * impurity(left, nl, opt.criterion) +
                        double(nr) / double(idx.size()) * impurity(right, nr, opt.criterion);
                    double decrease = node_weight * (node_imp - child_imp);
                    if (decrease > best_decrease) {
                        best_decrease = decrease;
                        best_feature = int(f);
                        best_threshold = threshold;
                    }
                }
            }
        }

        if (best_feature < 0 || best_decrease < opt.min_impurity_decrease) {
            TreeNode leaf;
            leaf.leaf_class = majority_class(counts);
            nodes.push_back(leaf);
            return int(nodes.size()) - 1;
        }

        std::vector<size_t> left_idx, right_idx;
        for (size_t i : idx)
            (data.rows[i][best_feature] <= best_threshold ? left_idx : right_idx).push_back(i);

        size_t self = nodes.size();
        nodes.emplace_back();
        nodes[self].feature = best_feature;
        nodes[self].threshold = best_threshold;
        int l = build(left_idx);
        int r = build(right_idx);
        nodes[self].left = l;
        nodes[self].right = r;
        return int(self);
    }
};

int tree_predict(const TreeParams& p, const std::vector<double>& x) {
    int cur = 0;
    while (p.nodes[cur].feature >= 0)
        cur = x[p.nodes[cur].feature] <= p.nodes[cur].threshold ? p.nodes[cur].left
                                                                : p.nodes[cur].right;
    return p.nodes[cur].leaf_class;
}

}  // namespace

TreeParams train_decision_tree(const TrainData& data, const TreeOptions& options, uint64_t seed) {
    if (data.rows.empty()) throw std::runtime_error("empty training set");
    Rng rng(seed);
    TreeBuilder builder{data, options, &rng, data.rows.size(), {}};
    std::vector<size_t> all(data.rows.size());
    std::iota(all.begin(), all.end(), 0);
    builder.build(all);
    return TreeParams{std::move(builder.nodes)};
}

ForestParams train_random_forest(const TrainData& data, const ForestOptions& options,
                                 uint64_t seed) {
    if (data.rows.empty()) throw std::runtime_error("empty training set");
    ForestParams forest;
    size_t n = data.rows.size();
    for (size_t t = 0; t < options.n_estimators; ++t) {
        uint64_t tree_seed = derive_seed(seed, "tree/" + std::to_string(t));
        Rng rng(tree_seed);

        TrainData boot;
        boot.n_classes = data.n_classes;
        if (options.bootstrap) {
            for (size_t i = 0; i < n; ++i) {
                size_t j = rng.below(n);
                boot.rows.push_back(data.rows[j]);
                boot.labels.push_back(data.labels[j]);
            }
        } else {
            boot.rows = data.rows;
            boot.labels = data.labels;
        }

        TreeOptions topt = options.tree;
        if (options.feature_subsample)
            topt.mtry = size_t(std::ceil(std::sqrt(double(data.dim()))));
        forest.trees.push_back(
            train_decision_tree(boot, topt, derive_seed(tree_seed, "splits")));
    }
    return forest;
}

// --- linear SVM -----------------------------------------------------------

double svm_objective(const std::vector<double>& w, const TrainData& data, int positive_class,
                     double penalty) {
    size_t d = data.dim();
    double reg = 0.0;
    for (double wi : w) reg += wi * wi;
    double lambda = penalty > 0.0 ? 1.0 / penalty : 0.0;
    double obj = 0.5 * lambda * reg;
    double hinge = 0.0;
    for (size_t i = 0; i < data.rows.size(); ++i) {
        double y = data.labels[i] == positive_class ? 1.0 : -1.0;
        double score = w[d];  // bias
        for (size_t j = 0; j < d; ++j) score += w[j] * data.rows[i][j];
        hinge += std::max(0.0, 1.0 - y * score);
    }
    return obj + hinge / double(data.rows.size());
}

std::pair<SvmParams, bool> train_linear_svm(const TrainData& data, const SvmOptions& options,
                                            uint64_t seed) {
    if (data.rows.empty()) throw std::runtime_error("empty training set");
    (void)seed;  // the optimizer is deterministic; seed kept for provenance symmetry
    size_t d = data.dim();
    size_t n = data.rows.size();
    SvmParams params;
    params.weights.assign(data.n_classes, std::vector<double>(d + 1, 0.0));
    bool degenerate = options.penalty <= 0.0;
    if (degenerate) return {params, true};  // regularizer-only optimum is w = 0

    double lambda = 1.0 / options.penalty;
    for (size_t c = 0; c < data.n_classes; ++c) {
        std::vector<double>& w = params.weights[c];
        double prev_obj = svm_objective(w, data, int(c), options.penalty);
        uint64_t t = 1;
        for (size_t epoch = 0; epoch < options.max_epochs; ++epoch) {
            for (size_t i = 0; i < n; ++i, ++t) {
                double y = data.labels[i] == int(c) ? 1.0 : -1.0;
                double score = w[d];
                for (size_t j = 0; j < d; ++j) score += w[j] * data.rows[i][j];
                double eta = 1.0 / (lambda * double(t));
                double shrink = 1.0 - eta * lambda;  // = 1 - 1/t
                for (size_t j = 0; j <= d; ++j) w[j] *= shrink;
                if (y * score < 1.0) {
                    for (size_t j = 0; j < d; ++j) w[j] += eta * y * data.rows[i][j];
                    w[d] += eta * y;
                }
            }
            double obj = svm_objective(w, data, int(c), options.penalty);
            if (prev_obj - obj < options.tolerance) break;
            prev_obj = obj;
        }
    }
    return {params, false};
}

// --- prediction -----------------------------------------------------------

int Model::predict(const std::vector<double>& x, std::vector<double>* scores) const {
    size_t k = classes.size();
    std::vector<double> s(k, 0.0);
    if (const auto* gnb = std::get_if<GnbParams>(&params)) {
        for (size_t c = 0; c < k; ++c) s[c] = gnb_score(*gnb, int(c), x);
    } else if (const auto* tree = std::get_if<TreeParams>(&params)) {
        s[tree_predict(*tree, x)] = 1.0;
    } else if (const auto* forest = std::get_if<ForestParams>(&params)) {
        for (const auto& t : forest->trees) s[tree_predict(t, x)] += 1.0;
    } else if (const auto* svm = std::get_if<SvmParams>(&params)) {
        size_t d = x.size();
        for (size_t c = 0; c < k; ++c) {
            double score = svm->weights[c][d];
            for (size_t j = 0; j < d; ++j) score += svm->weights[c][j] * x[j];
            s[c] = score;
        }
    }
    size_t best = 0;
    for (size_t c = 1; c < k; ++c)
        if (s[c] > s[best]) best = c;
    if (scores) *scores = std::move(s);
    return int(best);
}

std::string Model::predict_label(const std::vector<double>& x,
                                 std::vector<double>* scores) const {
    return classes[predict(x, scores)];
}

// --- hyperparameter random search -----------------------------------------

namespace {

std::string dtos(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double hyper_d(const std::map<std::string, std::string>& hyper, const std::string& key,
               double fallback) {
    auto it = hyper.find(key);
    return it == hyper.end() ? fallback : std::strtod(it->second.c_str(), nullptr);
}

std::map<std::string, std::string> sample_hyperparameters(const std::string& algorithm,
                                                          Rng& rng) {
    std::map<std::string, std::string> h;
    if (algorithm == "dtree" || algorithm == "rforest") {
        h["criterion"] = rng.below(2) == 0 ? "gini" : "information-gain";
        h["min_impurity_decrease"] = dtos(rng.uniform(0.0, 1.0));
        if (algorithm == "rforest")
            h["n_estimators"] = std::to_string(5 + rng.below(16));  // [5, 20]
    } else if (algorithm == "svm") {
        h["penalty"] = dtos(rng.uniform(0.0, 5.0));
        h["tolerance"] = dtos(rng.uniform(0.0, 1e-3));
    }
    return h;
}

}  // namespace

std::variant<GnbParams, TreeParams, ForestParams, SvmParams> train_algorithm(
    const std::string& algorithm, const TrainData& data,
    const std::map<std::string, std::string>& hyper, uint64_t seed) {
    if (algorithm == "gnb") return train_gnb(data);
    if (algorithm == "dtree") {
        TreeOptions opt;
        auto it = hyper.find("criterion");
        if (it != hyper.end()) opt.criterion = parse_criterion(it->second);
        opt.min_impurity_decrease = hyper_d(hyper, "min_impurity_decrease", 0.0);
        return train_decision_tree(data, opt, seed);
    }
    if (algorithm == "rforest") {
        ForestOptions opt;
        auto it = hyper.find("criterion");
        if (it != hyper.end()) opt.tree.criterion = parse_criterion(it->second);
        opt.tree.min_impurity_decrease = hyper_d(hyper, "min_impurity_decrease", 0.0);
        opt.n_estimators = size_t(hyper_d(hyper, "n_estimators", 10));
        return train_random_forest(data, opt, seed);
    }
    if (algorithm == "svm") {
        SvmOptions opt;
        opt.penalty = hyper_d(hyper, "penalty", 1.0);
        opt.tolerance = hyper_d(hyper, "tolerance", 1e-4);
        return train_linear_svm(data, opt, seed).first;
    }
    throw std::runtime_error("unknown algorithm: " + algorithm);
}

SearchResult random_search(const std::string& algorithm, const TrainData& data, size_t n_trials,
                           uint64_t seed) {
    if (n_trials < 1) throw std::runtime_error("random search needs at least 1 trial");

    // internal per-class 80/20 carve of the training split
    std::map<int, std::vector<size_t>> by_class;
    for (size_t i = 0; i < data.rows.size(); ++i) by_class[data.labels[i]].push_back(i);
    TrainData carve_train, carve_val;
    carve_train.n_classes = carve_val.n_classes = data.n_classes;
    for (auto& [label, idx] : by_class) {
        Rng rng(derive_seed(seed, "carve/" + std::to_string(label)));
        rng.shuffle(idx);
        size_t n_train = size_t(double(idx.size()) * 0.8);
        if (n_train == 0 && idx.size() > 1) n_train = 1;
        for (size_t i = 0; i < idx.size(); ++i) {
            TrainData& dst = i < n_train ? carve_train : carve_val;
            dst.rows.push_back(data.rows[idx[i]]);
            dst.labels.push_back(data.labels[idx[i]]);
        }
    }
    if (carve_val.rows.empty())
        throw std::runtime_error("training set too small for a validation carve");

    SearchResult result;
    double best_score = -1.0;
    for (size_t trial = 0; trial < n_trials; ++trial) {
        Rng rng(derive_seed(seed, "trial/" + std::to_string(trial)));
        auto hyper = sample_hyperparameters(algorithm, rng);
        auto params = train_algorithm(algorithm, carve_train, hyper,
                                      derive_seed(seed, "fit/" + std::to_string(trial)));
        Model probe;
        probe.algorithm = algorithm;
        probe.classes.resize(data.n_classes);
        probe.params = std::move(params);
        std::vector<int> predictions;
        for (const auto& row : carve_val.rows) predictions.push_back(probe.predict(row));
        double score = macro_f1(predictions, carve_val.labels, data.n_classes);
        result.trials.push_back({hyper, score});
        if (score > best_score) {
            best_score = score;
            result.best = hyper;
            result.best_trial = trial;
        }
    }
    return result;
}

// --- persistence ----------------------------------------------------------

namespace {

nlohmann::json doubles_to_json(const std::vector<double>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : v) arr.push_back(dtos(x));
    return arr;
}

std::vector<double> doubles_from_json(const nlohmann::json& arr) {
    std::vector<double> v;
    for (const auto& s : arr) v.push_back(std::strtod(s.get<std::string>().c_str(), nullptr));
    return v;
}

nlohmann::json index_to_json(const std::map<std::string, size_t>& index) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : index) j[k] = v;
    return j;
}

std::map<std::string, size_t> index_from_json(const nlohmann::json& j) {
    std::map<std::string, size_t> index;
    for (auto it = j.begin(); it != j.end(); ++it) index[it.key()] = it.value().get<size_t>();
    return index;
}

nlohmann::json tree_to_json(const TreeParams& tree) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : tree.nodes)
        nodes.push_back({{"f", n.feature},
                         {"t", dtos(n.threshold)},
                         {"l", n.left},
                         {"r", n.right},
                         {"c", n.leaf_class}});
    return nodes;
}

TreeParams tree_from_json(const nlohmann::json& j) {
    TreeParams tree;
    for (const auto& n : j) {
        TreeNode node;
        node.feature = n.at("f").get<int>();
        node.threshold = std::strtod(n.at("t").get<std::string>().c_str(), nullptr);
        node.left = n.at("l").get<int>();
        node.right = n.at("r").get<int>();
        node.leaf_class = n.at("c").get<int>();
        tree.nodes.push_back(node);
    }
    return tree;
}

}  // namespace

std::string model_to_json(const Model& model) {
    nlohmann::json j;
    j["version"] = 1;
    j["algorithm"] = model.algorithm;
    j["hyperparameters"] = model.hyperparameters;
    j["classes"] = model.classes;

    nlohmann::json space;
    space["pld_index"] = index_to_json(model.space.pld_index);
    space["tld_index"] = index_to_json(model.space.tld_index);
    space["term_index"] = index_to_json(model.space.term_index);
    space["pld_offset"] = model.space.pld_offset;
    space["tld_offset"] = model.space.tld_offset;
    space["node_vocab_offset"] = model.space.node_vocab_offset;
    space["page_vocab_offset"] = model.space.page_vocab_offset;
    space["dimension"] = model.space.dimension;
    space["task"] = {{"name", model.space.task.name},
                     {"root_type", model.space.task.root_type},
                     {"target_predicate", model.space.task.target_predicate}};
    j["feature_space"] = std::move(space);

    j["standardizer"] = {{"mean", doubles_to_json(model.standardizer.mean)},
                         {"stddev", doubles_to_json(model.standardizer.stddev)}};

    nlohmann::json params;
    if (const auto* gnb = std::get_if<GnbParams>(&model.params)) {
        params["log_prior"] = doubles_to_json(gnb->log_prior);
        nlohmann::json means = nlohmann::json::array(), vars = nlohmann::json::array();
        for (const auto& m : gnb->mean) means.push_back(doubles_to_json(m));
        for (const auto& v : gnb->variance) vars.push_back(doubles_to_json(v));
        params["mean"] = std::move(means);
        params["variance"] = std::move(vars);
    } else if (const auto* tree = std::get_if<TreeParams>(&model.params)) {
        params["nodes"] = tree_to_json(*tree);
    } else if (const auto* forest = std::get_if<ForestParams>(&model.params)) {
        nlohmann::json trees = nlohmann::json::array();
        for (const auto& t : forest->trees) trees.push_back(tree_to_json(t));
        params["trees"] = std::move(trees);
    } else if (const auto* svm = std::get_if<SvmParams>(&model.params)) {
        nlohmann::json weights = nlohmann::json::array();
        for (const auto& w : svm->weights) weights.push_back(doubles_to_json(w));
        params["weights"] = std::move(weights);
    }
    j["parameters"] = std::move(params);

    j["provenance"] = {{"seed", model.provenance.seed},
                       {"dataset_id", model.provenance.dataset_id},
                       {"vocab_version", model.provenance.vocab_version}};
    return j.dump(2);
}

Model model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("unknown model version");
    }
    if (!j.is_object() || !j.contains("version") || !j.at("version").is_number_integer() ||
        j.at("version").get<int>() != 1)
        throw std::runtime_error("unknown model version");

    Model m;
    m.algorithm = j.at("algorithm").get<std::string>();
    m.hyperparameters = j.at("hyperparameters").get<std::map<std::string, std::string>>();
    m.classes = j.at("classes").get<std::vector<std::string>>();

    const auto& space = j.at("feature_space");
    m.space.pld_index = index_from_json(space.at("pld_index"));
    m.space.tld_index = index_from_json(space.at("tld_index"));
    m.space.term_index = index_from_json(space.at("term_index"));
    m.space.pld_offset = space.at("pld_offset").get<size_t>();
    m.space.tld_offset = space.at("tld_offset").get<size_t>();
    m.space.node_vocab_offset = space.at("node_vocab_offset").get<size_t>();
    m.space.page_vocab_offset = space.at("page_vocab_offset").get<size_t>();
    m.space.dimension = space.at("dimension").get<size_t>();
    m.space.task = {space.at("task").at("name").get<std::string>(),
                    space.at("task").at("root_type").get<std::string>(),
                    space.at("task").at("target_predicate").get<std::string>()};

    m.standardizer.mean = doubles_from_json(j.at("standardizer").at("mean"));
    m.standardizer.stddev = doubles_from_json(j.at("standardizer").at("stddev"));

    const auto& params = j.at("parameters");
    if (m.algorithm == "gnb") {
        GnbParams p;
        p.log_prior = doubles_from_json(params.at("log_prior"));
        for (const auto& row : params.at("mean")) p.mean.push_back(doubles_from_json(row));
        for (const auto& row : params.at("variance"))
            p.variance.push_back(doubles_from_json(row));
        m.params = std::move(p);
    } else if (m.algorithm == "dtree") {
        m.params = tree_from_json(params.at("nodes"));
    } else if (m.algorithm == "rforest") {
        ForestParams p;
        for (const auto& t : params.at("trees")) p.trees.push_back(tree_from_json(t));
        m.params = std::move(p);
    } else if (m.algorithm == "svm") {
        SvmParams p;
        for (const auto& w : params.at("weights")) p.weights.push_back(doubles_from_json(w));
        m.params = std::move(p);
    } else {
        throw std::runtime_error("unknown algorithm in model file: " + m.algorithm);
    }

    m.provenance.seed = j.at("provenance").at("seed").get<uint64_t>();
    m.provenance.dataset_id = j.at("provenance").at("dataset_id").get<std::string>();
    m.provenance.vocab_version = j.at("provenance").at("vocab_version").get<std::string>();
    return m;
}

void save_model(const Model& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << model_to_json(model) << '\n';
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

}  // namespace markup
