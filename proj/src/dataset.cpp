#include "markup/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "markup/rng.hpp"

namespace markup {

namespace {

const std::string kEventType = "http://schema.org/Event";
const std::string kGenreProp = "http://schema.org/genre";
const std::string kMovieType = "http://schema.org/Movie";

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

void sort_by_node_id(std::vector<LabeledInstance>& v) {
    std::sort(v.begin(), v.end(), [](const LabeledInstance& a, const LabeledInstance& b) {
        return a.node.node_id() < b.node.node_id();
    });
}

}  // namespace

std::vector<std::shared_ptr<Page>> build_pages(std::vector<NodeRecord> nodes) {
    std::vector<std::shared_ptr<Page>> pages;
    std::unordered_map<std::string, size_t> index;
    for (auto& n : nodes) {
        auto it = index.find(n.url);
        if (it == index.end()) {
            auto page = std::make_shared<Page>();
            page->url = n.url;
            it = index.emplace(n.url, pages.size()).first;
            pages.push_back(std::move(page));
        }
        pages[it->second]->nodes.push_back(std::move(n));
    }
    return pages;
}

// --- event task -----------------------------------------------------------

namespace {

// Distinct proper event subtypes declared on the node.
std::vector<std::string> proper_event_subtypes(const NodeRecord& node, const Vocabulary& vocab,
                                               bool* has_event_type) {
    std::vector<std::string> subs;
    if (has_event_type) *has_event_type = false;
    for (const auto& t : node.type_iris()) {
        if (!vocab.has_type(t)) continue;
        if (!vocab.is_subtype(t, kEventType)) continue;
        if (has_event_type) *has_event_type = true;
        if (t != kEventType && std::find(subs.begin(), subs.end(), t) == subs.end())
            subs.push_back(t);
    }
    return subs;
}

}  // namespace

std::vector<std::string> top_event_subtypes(const std::vector<std::shared_ptr<Page>>& pages,
                                            const Vocabulary& vocab, size_t k) {
    std::map<std::string, uint64_t> counts;
    for (const auto& page : pages) {
        for (const auto& node : page->nodes) {
            auto subs = proper_event_subtypes(node, vocab, nullptr);
            if (subs.size() == 1) ++counts[subs.front()];
        }
    }
    std::vector<std::pair<std::string, uint64_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::string> top;
    for (size_t i = 0; i < ranked.size() && i < k; ++i) top.push_back(ranked[i].first);
    return top;
}

std::optional<std::string> label_event_node(const NodeRecord& node, const Vocabulary& vocab,
                                            const std::set<std::string>& top_subtype_iris,
                                            EventLabelStats* stats) {
    bool has_event_type = false;
    auto subs = proper_event_subtypes(node, vocab, &has_event_type);
    if (subs.size() > 1) {
        if (stats) ++stats->multi_typed;
        return std::nullopt;
    }
    if (subs.empty()) {
        if (stats && has_event_type) ++stats->unlabeled;
        return std::nullopt;
    }
    const std::string& iri = subs.front();
    if (top_subtype_iris.count(iri)) return Vocabulary::local_name(iri);
    return "Other";
}

InstancesByClass label_events(const std::vector<std::shared_ptr<Page>>& pages,
                              const Vocabulary& vocab, size_t k, EventLabelStats* stats) {
    auto top = top_event_subtypes(pages, vocab, k);
    std::set<std::string> top_set(top.begin(), top.end());
    InstancesByClass by_class;
    for (const auto& page : pages) {
        for (const auto& node : page->nodes) {
            auto label = label_event_node(node, vocab, top_set, stats);
            if (!label) continue;
            by_class[*label].push_back(LabeledInstance{node, *label, page});
        }
    }
    return by_class;
}

namespace {

uint64_t resolve_cap(const InstancesByClass& by_class, const SamplingConfig& config) {
    if (by_class.empty()) throw std::runtime_error("no labeled instances");
    uint64_t min_size = UINT64_MAX;
    for (const auto& [cls, v] : by_class) min_size = std::min<uint64_t>(min_size, v.size());
    uint64_t cap = config.class_cap.value_or(min_size);
    for (const auto& [cls, v] : by_class)
        if (v.size() < cap)
            throw std::runtime_error("class '" + cls + "' has " + std::to_string(v.size()) +
                                     " instances, fewer than the cap " + std::to_string(cap));
    return cap;
}

std::vector<LabeledInstance> run_sampling(const InstancesByClass& by_class, uint64_t cap,
                                          const SamplingConfig& config) {
    return config.strategy == SamplingStrategy::Stratified
               ? sample_stratified(by_class, cap, config.seed)
               : sample_pld_aware(by_class, cap, config.seed);
}

std::string strategy_name(SamplingStrategy s) {
    return s == SamplingStrategy::Stratified ? "stratified" : "pld";
}

}  // namespace

LabeledDataset build_event_dataset(const std::vector<std::shared_ptr<Page>>& pages,
                                   const Vocabulary& vocab, size_t k,
                                   const SamplingConfig& config) {
    InstancesByClass by_class = label_events(pages, vocab, k, nullptr);
    uint64_t cap = resolve_cap(by_class, config);
    LabeledDataset ds;
    for (const auto& [cls, v] : by_class) ds.classes.push_back(cls);
    ds.instances = run_sampling(by_class, cap, config);
    ds.provenance = {"events", strategy_name(config.strategy), config.seed, cap, vocab.version()};
    return ds;
}

// --- movie genre task -----------------------------------------------------

std::vector<GenrePattern> load_genres(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open genre file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<GenrePattern> genres;
    for (const auto& g : j.at("genres")) {
        GenrePattern p;
        p.label = g.at("label").get<std::string>();
        for (const auto& pat : g.at("patterns")) p.patterns.push_back(pat.get<std::string>());
        genres.push_back(std::move(p));
    }
    return genres;
}

std::set<std::string> label_movie_node(const NodeRecord& node,
                                       const std::vector<GenrePattern>& genres) {
    std::set<std::string> labels;
    for (const auto& [p, o] : node.statements) {
        if (p != kGenreProp || o.kind != TermKind::Literal) continue;
        std::string literal = to_lower(o.value);
        for (const auto& g : genres) {
            for (const auto& pat : g.patterns) {
                if (literal.find(to_lower(pat)) != std::string::npos) {
                    labels.insert(g.label);
                    break;
                }
            }
        }
    }
    return labels;
}

std::map<std::string, LabeledDataset> build_genre_datasets(
    const std::vector<std::shared_ptr<Page>>& pages, const std::vector<GenrePattern>& genres,
    size_t k, const SamplingConfig& config) {
    // candidate instances: movie-typed nodes carrying at least one s:genre literal
    struct Candidate {
        const NodeRecord* node;
        std::shared_ptr<const Page> page;
        std::set<std::string> labels;
    };
    std::vector<Candidate> candidates;
    for (const auto& page : pages) {
        for (const auto& node : page->nodes) {
            bool is_movie = false;
            for (const auto& t : node.type_iris())
                if (t == kMovieType) is_movie = true;
            if (!is_movie) continue;
            bool has_genre = false;
            for (const auto& [p, o] : node.statements)
                if (p == kGenreProp && o.kind == TermKind::Literal) has_genre = true;
            if (!has_genre) continue;
            candidates.push_back({&node, page, label_movie_node(node, genres)});
        }
    }

    std::map<std::string, uint64_t> genre_counts;
    for (const auto& c : candidates)
        for (const auto& g : c.labels) ++genre_counts[g];
    std::vector<std::pair<std::string, uint64_t>> ranked(genre_counts.begin(), genre_counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::string> top;
    for (size_t i = 0; i < ranked.size() && i < k; ++i) top.push_back(ranked[i].first);
    if (top.size() < k)
        throw std::runtime_error("only " + std::to_string(top.size()) +
                                 " genres with positive instances, need " + std::to_string(k));

    // per-genre binary class partitions
    std::map<std::string, InstancesByClass> partitions;
    uint64_t c_m = UINT64_MAX;  // smallest class across all datasets
    for (const auto& g : top) {
        InstancesByClass part;
        for (const auto& c : candidates) {
            bool positive = c.labels.count(g) > 0;
            const std::string label = positive ? g : "Other";
            part[label].push_back(LabeledInstance{*c.node, label, c.page});
        }
        if (!part.count(g)) throw std::runtime_error("genre with zero positives: " + g);
        if (!part.count("Other"))
            throw std::runtime_error("genre with zero negatives: " + g);
        for (const auto& [cls, v] : part) c_m = std::min<uint64_t>(c_m, v.size());
        partitions[g] = std::move(part);
    }
    uint64_t cap = config.class_cap.value_or(c_m);

    std::map<std::string, LabeledDataset> out;
    for (const auto& g : top) {
        SamplingConfig cfg = config;
        cfg.seed = derive_seed(config.seed, "genre/" + g);
        LabeledDataset ds;
        ds.classes = {g, "Other"};
        ds.instances = run_sampling(partitions[g], cap, cfg);
        ds.provenance = {"genre:" + g, strategy_name(config.strategy), config.seed, cap, ""};
        out[g] = std::move(ds);
    }
    return out;
}

// --- sampling -------------------------------------------------------------

std::vector<LabeledInstance> sample_stratified(const InstancesByClass& by_class, uint64_t cap,
                                               uint64_t seed) {
    std::vector<LabeledInstance> out;
    for (const auto& [cls, instances] : by_class) {
        if (instances.size() < cap)
            throw std::runtime_error("class '" + cls + "' smaller than cap");
        std::vector<LabeledInstance> pool = instances;
        sort_by_node_id(pool);
        Rng rng(derive_seed(seed, "stratified/" + cls));
        // partial Fisher-Yates: the first cap slots are the sample
        for (uint64_t i = 0; i < cap && i + 1 < pool.size(); ++i) {
            size_t j = i + rng.below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(cap);
        sort_by_node_id(pool);
        out.insert(out.end(), pool.begin(), pool.end());
    }
    return out;
}

std::vector<LabeledInstance> sample_pld_aware(const InstancesByClass& by_class, uint64_t cap,
                                              uint64_t seed) {
    std::vector<LabeledInstance> out;
    for (const auto& [cls, instances] : by_class) {
        if (instances.size() < cap)
            throw std::runtime_error("class '" + cls + "' smaller than cap");

        std::map<std::string, std::vector<LabeledInstance>> by_pld;
        for (const auto& inst : instances) by_pld[inst.node.pld].push_back(inst);
        for (auto& [pld, v] : by_pld) sort_by_node_id(v);

        std::vector<LabeledInstance> selected;

        // admit every pld below the fair share in full, recomputing until the
        // remaining plds all meet or exceed it
        for (;;) {
            uint64_t need = cap - selected.size();
            if (need == 0 || by_pld.empty()) break;
            double fair = double(need) / double(by_pld.size());
            bool added = false;
            for (auto it = by_pld.begin(); it != by_pld.end();) {
                if (double(it->second.size()) < fair) {
                    selected.insert(selected.end(), it->second.begin(), it->second.end());
                    it = by_pld.erase(it);
                    added = true;
                } else {
                    ++it;
                }
            }
            if (!added) break;
        }

        uint64_t need = cap - selected.size();
        if (need > 0) {
            if (by_pld.empty())
                throw std::logic_error("fair-share loop exhausted plds before reaching cap");
            double fair = double(need) / double(by_pld.size());
            uint64_t base = uint64_t(fair);
            uint64_t deficit = need - base * by_pld.size();

            // residual deficit: one extra instance per pld, largest pld first
            std::vector<std::string> order;
            for (const auto& [pld, v] : by_pld) order.push_back(pld);
            std::stable_sort(order.begin(), order.end(),
                             [&](const std::string& a, const std::string& b) {
                                 size_t sa = by_pld.at(a).size(), sb = by_pld.at(b).size();
                                 if (sa != sb) return sa > sb;
                                 return a < b;
                             });
            std::set<std::string> extra(order.begin(), order.begin() + deficit);

            for (const auto& [pld, v] : by_pld) {
                uint64_t take = base + (extra.count(pld) ? 1 : 0);
                std::vector<LabeledInstance> pool = v;
                Rng rng(derive_seed(seed, "pld/" + cls + "/" + pld));
                for (uint64_t i = 0; i < take && i + 1 < pool.size(); ++i) {
                    size_t j = i + rng.below(pool.size() - i);
                    std::swap(pool[i], pool[j]);
                }
                pool.resize(take);
                selected.insert(selected.end(), pool.begin(), pool.end());
            }
        }

        if (selected.size() != cap)
            throw std::logic_error("pld-aware sampling produced " +
                                   std::to_string(selected.size()) + " instead of " +
                                   std::to_string(cap));
        sort_by_node_id(selected);
        out.insert(out.end(), selected.begin(), selected.end());
    }
    return out;
}

InstancesByClass group_by_class(const std::vector<LabeledInstance>& instances) {
    InstancesByClass by_class;
    for (const auto& inst : instances) by_class[inst.label].push_back(inst);
    return by_class;
}

DatasetSplit split_train_test(const LabeledDataset& dataset, double ratio, uint64_t seed) {
    if (ratio <= 0.0 || ratio >= 1.0) throw std::runtime_error("split ratio must be in (0,1)");
    DatasetSplit split;
    split.provenance = dataset.provenance;
    for (const auto& [cls, instances] : group_by_class(dataset.instances)) {
        if (instances.size() < 2)
            throw std::runtime_error("class '" + cls + "' has fewer than 2 instances");
        std::vector<LabeledInstance> pool = instances;
        sort_by_node_id(pool);
        Rng rng(derive_seed(seed, "split/" + cls));
        rng.shuffle(pool);
        size_t n_train = size_t(double(pool.size()) * ratio);
        for (size_t i = 0; i < pool.size(); ++i)
            (i < n_train ? split.train : split.test).push_back(pool[i]);
    }
    sort_by_node_id(split.train);
    sort_by_node_id(split.test);
    return split;
}

// --- persistence ----------------------------------------------------------

void write_dataset(const std::string& dataset_path, const std::string& pages_path,
                   const LabeledDataset& dataset) {
    std::map<std::string, std::shared_ptr<const Page>> pages;
    for (const auto& inst : dataset.instances) pages[inst.page->url] = inst.page;

    std::ofstream pout(pages_path);
    if (!pout) throw std::runtime_error("cannot write pages sidecar: " + pages_path);
    for (const auto& [url, page] : pages) {
        nlohmann::json j;
        j["url"] = url;
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& n : page->nodes) nodes.push_back(nlohmann::json::parse(node_to_jsonl(n)));
        j["nodes"] = std::move(nodes);
        pout << j.dump() << '\n';
    }

    std::ofstream out(dataset_path);
    if (!out) throw std::runtime_error("cannot write dataset: " + dataset_path);
    nlohmann::json header;
    header["provenance"] = {{"task", dataset.provenance.task},
                            {"strategy", dataset.provenance.strategy},
                            {"seed", dataset.provenance.seed},
                            {"class_cap", dataset.provenance.class_cap},
                            {"vocab_version", dataset.provenance.vocab_version}};
    header["classes"] = dataset.classes;
    out << header.dump() << '\n';
    for (const auto& inst : dataset.instances) {
        nlohmann::json j;
        j["label"] = inst.label;
        j["node"] = nlohmann::json::parse(node_to_jsonl(inst.node));
        j["page"] = inst.page->url;
        out << j.dump() << '\n';
    }
}

LabeledDataset read_dataset(const std::string& dataset_path, const std::string& pages_path) {
    std::ifstream pin(pages_path);
    if (!pin) throw std::runtime_error("cannot open pages sidecar: " + pages_path);
    std::map<std::string, std::shared_ptr<Page>> pages;
    std::string line;
    while (std::getline(pin, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        auto page = std::make_shared<Page>();
        page->url = j.at("url").get<std::string>();
        for (const auto& n : j.at("nodes")) page->nodes.push_back(node_from_jsonl(n.dump()));
        pages[page->url] = std::move(page);
    }

    std::ifstream in(dataset_path);
    if (!in) throw std::runtime_error("cannot open dataset: " + dataset_path);
    if (!std::getline(in, line)) throw std::runtime_error("empty dataset file: " + dataset_path);
    nlohmann::json header = nlohmann::json::parse(line);
    LabeledDataset ds;
    for (const auto& c : header.at("classes")) ds.classes.push_back(c.get<std::string>());
    const auto& prov = header.at("provenance");
    ds.provenance = {prov.at("task").get<std::string>(), prov.at("strategy").get<std::string>(),
                     prov.at("seed").get<uint64_t>(), prov.at("class_cap").get<uint64_t>(),
                     prov.at("vocab_version").get<std::string>()};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        LabeledInstance inst;
        inst.label = j.at("label").get<std::string>();
        inst.node = node_from_jsonl(j.at("node").dump());
        auto it = pages.find(j.at("page").get<std::string>());
        if (it == pages.end())
            throw std::runtime_error("dataset references missing page: " +
                                     j.at("page").get<std::string>());
        inst.page = it->second;
        ds.instances.push_back(std::move(inst));
    }
    return ds;
}

}  // namespace markup
