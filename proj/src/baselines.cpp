#include "markup/baselines.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace markup {

std::string predict_random(const std::vector<std::string>& classes, Rng& rng) {
    if (classes.empty()) throw std::runtime_error("random baseline needs a non-empty class list");
    return classes[rng.below(classes.size())];
}

// --- SD-Type --------------------------------------------------------------

SDTypeStatistics train_sdtype(const std::vector<LabeledInstance>& train, const Vocabulary& vocab,
                              const TaskSpec& task) {
    if (train.empty()) throw std::runtime_error("empty training set");

    SDTypeStatistics stats;
    std::map<std::string, size_t> class_index;
    for (const auto& inst : train)
        if (class_index.emplace(inst.label, 0).second) stats.classes.push_back(inst.label);
    std::sort(stats.classes.begin(), stats.classes.end());
    for (size_t i = 0; i < stats.classes.size(); ++i) class_index[stats.classes[i]] = i;
    size_t k = stats.classes.size();

    stats.prior.assign(k, 0.0);
    std::map<std::string, std::vector<double>> counts;
    for (const auto& inst : train) {
        size_t c = class_index[inst.label];
        stats.prior[c] += 1.0;
        for (const auto& key : node_feature_keys(inst.node, vocab, task)) {
            auto [it, fresh] = counts.try_emplace(key, std::vector<double>(k, 0.0));
            it->second[c] += 1.0;
        }
    }
    for (double& p : stats.prior) p /= double(train.size());

    double uniform = 1.0 / double(k);
    for (auto& [key, cc] : counts) {
        double total = 0.0;
        for (double c : cc) total += c;
        std::vector<double> cond(k);
        double w = 0.0;
        for (size_t i = 0; i < k; ++i) {
            cond[i] = cc[i] / total;
            w += (cond[i] - uniform) * (cond[i] - uniform);
        }
        stats.conditional[key] = std::move(cond);
        stats.weight[key] = w;
    }
    return stats;
}

std::string predict_sdtype(const SDTypeStatistics& stats, const NodeRecord& node,
                           const Vocabulary& vocab, const TaskSpec& task,
                           std::vector<double>* scores) {
    size_t k = stats.classes.size();
    std::vector<double> s(k, 0.0);
    bool any = false;
    for (const auto& key : node_feature_keys(node, vocab, task)) {
        auto it = stats.conditional.find(key);
        if (it == stats.conditional.end()) continue;
        any = true;
        double w = stats.weight.at(key);
        for (size_t c = 0; c < k; ++c) s[c] += w * it->second[c];
    }
    if (!any) s = stats.prior;
    size_t best = 0;
    for (size_t c = 1; c < k; ++c)
        if (s[c] > s[best]) best = c;
    if (scores) *scores = std::move(s);
    return stats.classes[best];
}

// --- KG-B -----------------------------------------------------------------

LinkingClientConfig default_linking_config() {
    LinkingClientConfig c;
    c.language_models = {{"en", "en"}, {"de", "de"}, {"fr", "fr"}, {"es", "es"},
                         {"it", "it"}, {"nl", "nl"}, {"pt", "pt"}, {"ru", "ru"},
                         {"tr", "tr"}, {"da", "da"}, {"sv", "sv"}, {"hu", "hu"}};
    return c;
}

std::vector<LinkingCandidate> parse_candidates(const std::string& body) {
    nlohmann::json j = nlohmann::json::parse(body);
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("candidates")) return {};
        arr = &j.at("candidates");
    }
    std::vector<LinkingCandidate> out;
    for (const auto& c : *arr) {
        LinkingCandidate cand;
        cand.uri = c.value("uri", "");
        if (c.contains("types")) cand.types = c.at("types").get<std::vector<std::string>>();
        cand.similarity_score = c.value("similarityScore", 0.0);
        out.push_back(std::move(cand));
    }
    return out;
}

namespace {

struct NameLiteral {
    std::string text;
    std::string lang;
};

std::optional<NameLiteral> node_name(const NodeRecord& node) {
    for (const auto& [p, o] : node.statements)
        if (p == kSchemaPrefix + std::string("name") && o.kind == TermKind::Literal)
            return NameLiteral{o.value, o.lang};
    return std::nullopt;
}

std::string pick_model(const LinkingClientConfig& config, const std::string& lang) {
    std::string code = lang.substr(0, lang.find('-'));
    std::transform(code.begin(), code.end(), code.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    auto it = config.language_models.find(code);
    return it != config.language_models.end() ? it->second : "en";
}

std::string fetch_candidates(const std::string& text, const std::string& model,
                             const LinkingClientConfig& config) {
    if (!config.fixture_path.empty()) {
        std::ifstream in(config.fixture_path);
        if (!in) throw std::runtime_error("cannot open fixture file: " + config.fixture_path);
        nlohmann::json fixtures = nlohmann::json::parse(in);
        auto it = fixtures.find(text);
        if (it == fixtures.end()) return R"({"candidates":[]})";
        return it->dump();
    }

    // split endpoint into host part and path
    std::string url = config.endpoint;
    size_t scheme = url.find("://");
    size_t path_start = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    std::string base = path_start == std::string::npos ? url : url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(config.timeout_seconds);
    client.set_read_timeout(config.timeout_seconds);
    httplib::Params params{{"text", text},
                           {"confidence", std::to_string(config.confidence)},
                           {"model", model}};
    auto res = client.Get(httplib::append_query_params(path, params));
    if (!res) throw std::runtime_error("linking endpoint unreachable: " + config.endpoint);
    if (res->status != 200)
        throw std::runtime_error("linking endpoint returned status " +
                                 std::to_string(res->status));
    return res->body;
}

}  // namespace

KgbPrediction kgb_classify(const NodeRecord& node, const LinkingClientConfig& config,
                           const std::string& accepted_label) {
    KgbPrediction out;
    out.label = "Other";
    auto name = node_name(node);
    if (!name) {
        out.no_name = true;
        return out;
    }

    std::string body = fetch_candidates(name->text, pick_model(config, name->lang), config);
    auto candidates = parse_candidates(body);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const LinkingCandidate& a, const LinkingCandidate& b) {
                         return a.similarity_score > b.similarity_score;
                     });
    for (const auto& cand : candidates) {
        if (cand.similarity_score < config.confidence) break;  // sorted descending
        bool type_ok = false;
        for (const auto& t : cand.types)
            if (std::find(config.accepted_types.begin(), config.accepted_types.end(), t) !=
                config.accepted_types.end())
                type_ok = true;
        if (!type_ok) continue;
        out.label = accepted_label;
        out.accepted = true;
        out.matched_uri = cand.uri;
        break;
    }
    return out;
}

KgbBatchReport kgb_classify_batch(const std::vector<NodeRecord>& nodes,
                                  const LinkingClientConfig& config,
                                  const std::string& accepted_label) {
    KgbBatchReport report;
    for (const auto& node : nodes) {
        bool done = false;
        for (int attempt = 0; attempt <= config.retries && !done; ++attempt) {
            try {
                report.predictions.push_back(kgb_classify(node, config, accepted_label));
                done = true;
            } catch (const std::exception&) {
                if (attempt == config.retries) {
                    KgbPrediction p;
                    p.label = "Other";
                    report.predictions.push_back(p);
                    ++report.skipped;
                }
            }
        }
    }
    return report;
}

}  // namespace markup
