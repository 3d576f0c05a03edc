// Desk-scale acceptance checks: one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "markup/baselines.hpp"
#include "markup/cleanse.hpp"
#include "markup/dataset.hpp"
#include "markup/learn.hpp"
#include "markup/metrics.hpp"
#include "markup/nodes.hpp"
#include "markup/pipeline.hpp"
#include "markup/rng.hpp"
#include "markup/synth.hpp"

using namespace markup;

namespace {

const char* S = "http://schema.org/";

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Vocabulary& vocab() {
    static Vocabulary v = Vocabulary::load("data/schema_org.json");
    return v;
}

PublicSuffixList& psl() {
    static PublicSuffixList p = PublicSuffixList::load("data/public_suffix_list.dat");
    return p;
}

// --- 1: parser conformance -------------------------------------------------

Check criterion_parser() {
    Check c;
    SynthSpec spec = default_event_synth_spec();
    spec.nodes_per_class = 8;
    spec.seed = 101;
    auto corpus = generate_synthetic_corpus(spec);

    std::vector<std::string> lines;
    for (const auto& q : corpus.quads) {
        lines.push_back(to_nquads(q));
        if (lines.size() == 180) break;
    }
    c.require(lines.size() == 180, "fixture shorter than 180 lines");

    // 20 mutations, each verified to actually break the line
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        std::string base = lines[rng.below(lines.size())];
        std::string bad;
        switch (i % 5) {
            case 0: bad = base.substr(0, base.size() - 2); break;              // no final dot
            case 1: bad = base.substr(0, base.size() / 2); break;              // truncated
            case 2: bad = base; bad.erase(bad.find('>'), 1); break;            // broken IRI
            case 3: bad = base; bad.insert(0, "<"); break;                     // stray bracket
            case 4: bad = "predicate only"; break;
        }
        try {
            parse_nquads_line(bad);
            bad = "still not a valid statement " + std::to_string(i);
        } catch (const ParseError&) {
        }
        lines.push_back(bad);
    }

    std::ostringstream all;
    for (const auto& l : lines) all << l << '\n';
    auto started = std::chrono::steady_clock::now();
    std::istringstream in(all.str());
    auto [quads, report] = parse_nquads(in, ErrorPolicy::SkipAndCount);
    c.require(report.skipped == 20,
              "expected 20 skips, got " + std::to_string(report.skipped));
    c.require(quads.size() == 180, "expected 180 quads");
    for (size_t i = 0; i < quads.size(); ++i)
        c.require(to_nquads(quads[i]) == lines[i], "round trip not byte-stable at " + lines[i]);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    c.require(ms < 1000, "parse took too long");
    return c;
}

// --- 2: cleansing fixtures -------------------------------------------------

Check criterion_cleansing() {
    Check c;
    // (mutated predicate, expected canonical form)
    std::vector<std::pair<std::string, std::string>> cases = {
        {"https://schema.org/name", std::string(S) + "name"},
        {"http://www.schema.org/startDate", std::string(S) + "startDate"},
        {"http://wwww.dirt-schema.org/location", std::string(S) + "location"},
        {"http://schema.orgorganizer", std::string(S) + "organizer"},
        {"http://SCHEMA.ORG/performer", std::string(S) + "performer"},
        {std::string(S) + "musicevent/name", std::string(S) + "MusicEvent/name"},
        {std::string(S) + "EVENT/STARTDATE", std::string(S) + "Event/startDate"},
        {"https://www.schema.org/event/location", std::string(S) + "Event/location"},
    };
    std::vector<Quad> quads;
    for (const auto& [mutated, expected] : cases) {
        Quad q;
        q.subject = {TermKind::Iri, "http://e.com/a", "", ""};
        q.predicate = mutated;
        q.object = {TermKind::Literal, "v", "", ""};
        q.source_url = "http://e.com/p";
        quads.push_back(q);
    }
    Quad typed = quads.front();
    typed.predicate = kRdfType;
    typed.object = {TermKind::Iri, "https://www.schema.org/businessevent", "", ""};
    quads.push_back(typed);

    CleansingReport r1;
    auto clean = cleanse_quads(quads, vocab(), UndefinedPolicy::Drop, r1);
    c.require(clean.size() == quads.size(), "a repairable quad was dropped");
    for (size_t i = 0; i < cases.size(); ++i)
        c.require(clean[i].predicate == cases[i].second,
                  cases[i].first + " -> " + clean[i].predicate);
    c.require(clean.back().object.value == std::string(S) + "BusinessEvent",
              "typed object not repaired");

    CleansingReport r2;
    auto again = cleanse_quads(clean, vocab(), UndefinedPolicy::Drop, r2);
    c.require(r2.namespace_fixes == 0 && r2.casing_fixes == 0 && r2.dropped_undefined == 0,
              "second pass still reports fixes");
    c.require(again == clean, "second pass changed quads");
    return c;
}

// --- 3: feature oracle -----------------------------------------------------

Check criterion_features() {
    Check c;
    // the two worked examples
    NodeRecord summit;
    summit.subject = "_:node3957";
    summit.url = "https://gdssummits.com/nghealthcare/us/";
    summit.pld = "gdssummits.com";
    summit.tld = ".com";
    summit.statements = {
        {kRdfType, {TermKind::Iri, std::string(S) + "BusinessEvent", "", ""}},
        {std::string(S) + "Event/name", {TermKind::Literal, "NG Healthcare Summit US", "en", ""}},
        {std::string(S) + "Event/location", {TermKind::Literal, "Omni Barton Creek", "en", ""}},
    };
    auto page = std::make_shared<Page>();
    page->url = summit.url;
    page->nodes.push_back(summit);
    NodeRecord org = summit;
    org.subject = "_:nodea9ff";
    org.statements = {{std::string(S) + "Organization/url",
                       {TermKind::Iri, "http://www.gdsinternational.com", "", ""}}};
    NodeRecord second = summit;
    second.subject = "_:node4ccb";
    second.statements = {{kRdfType, {TermKind::Iri, std::string(S) + "BusinessEvent", "", ""}}};
    page->nodes.push_back(org);
    page->nodes.push_back(second);

    auto task = TaskSpec::events();
    auto nc = node_vocab_counts(summit, vocab(), task);
    c.require(nc.size() == 3 && nc["rdf:type"] == 1 && nc[std::string(S) + "Event/name"] == 1 &&
                  nc[std::string(S) + "Event/location"] == 1,
              "node-vocab counts disagree with the worked example");
    auto pc = page_vocab_counts(*page, vocab(), task);
    c.require(pc.size() == 4 && pc["rdf:type"] == 2 && pc[std::string(S) + "Event/name"] == 1 &&
                  pc[std::string(S) + "Event/location"] == 1 &&
                  pc[std::string(S) + "Organization/url"] == 1,
              "page-vocab counts disagree with the worked example");

    LabeledInstance inst{summit, "BusinessEvent", page};
    auto space = build_feature_space({inst}, vocab(), task);
    auto v = featurize(inst, space, vocab());
    double node_norm = 0.0, page_norm = 0.0;
    for (const auto& [i, x] : v.values) {
        if (i >= space.page_vocab_offset) page_norm += x * x;
        else if (i >= space.node_vocab_offset) node_norm += x * x;
    }
    c.require(std::fabs(node_norm - 1.0) < 1e-12, "node-vocab block norm off");
    c.require(std::fabs(page_norm - 1.0) < 1e-12, "page-vocab block norm off");

    // brute-force recount agreement on 1,000 synthetic nodes
    SynthSpec spec = default_event_synth_spec();
    spec.nodes_per_class = 125;
    spec.seed = 33;
    auto corpus = generate_synthetic_corpus(spec);
    auto pages = build_pages(assemble_nodes(corpus.quads, psl()));
    std::vector<LabeledInstance> instances;
    for (const auto& p : pages)
        for (const auto& n : p->nodes) instances.push_back({n, "", p});
    c.require(instances.size() == 1000, "expected 1,000 synthetic nodes");

    auto full_space = build_feature_space(instances, vocab(), task);
    for (const auto& i : instances) {
        auto dense = featurize(i, full_space, vocab()).dense();
        auto counts = node_vocab_counts(i.node, vocab(), task);
        double norm = 0.0;
        for (const auto& [k, cnt] : counts) norm += cnt * cnt;
        norm = std::sqrt(norm);
        for (const auto& [k, cnt] : counts)
            c.require(std::fabs(dense[full_space.term_index.at(k)] - cnt / norm) < 1e-12,
                      "recount mismatch on " + k);
        double block = 0.0;
        for (size_t d = full_space.node_vocab_offset; d < full_space.page_vocab_offset; ++d)
            block += dense[d] * dense[d];
        c.require(std::fabs(block - 1.0) < 1e-12, "node block norm drifted");
    }
    return c;
}

// --- 4: sampling properties ------------------------------------------------

LabeledInstance synthetic_instance(const std::string& label, const std::string& pld, int i) {
    LabeledInstance li;
    li.node.subject = "http://" + pld + "/" + label + std::to_string(i);
    li.node.url = li.node.subject + ".html";
    li.node.pld = pld;
    li.node.tld = ".com";
    li.label = label;
    return li;
}

Check criterion_sampling() {
    Check c;
    // skewed pool: 8 classes x 2,000 instances over Zipf-ish plds
    InstancesByClass by_class;
    Rng rng(404);
    std::vector<double> cdf;
    double total = 0.0;
    for (int p = 0; p < 300; ++p) {
        total += 1.0 / std::pow(double(p + 1), 1.5);
        cdf.push_back(total);
    }
    for (double& x : cdf) x /= total;
    for (int cls = 0; cls < 8; ++cls) {
        std::string label = "C" + std::to_string(cls);
        for (int i = 0; i < 2000; ++i) {
            double u = rng.uniform();
            size_t p = size_t(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            by_class[label].push_back(
                synthetic_instance(label, "pld" + std::to_string(p) + ".com", i));
        }
    }

    auto distinct_plds = [](const std::vector<LabeledInstance>& v) {
        std::set<std::string> s;
        for (const auto& i : v) s.insert(i.node.pld);
        return s.size();
    };
    size_t wins = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto strat = sample_stratified(by_class, 500, seed);
        auto fair = sample_pld_aware(by_class, 500, seed);
        std::map<std::string, int> balance_s, balance_f;
        for (const auto& i : strat) ++balance_s[i.label];
        for (const auto& i : fair) ++balance_f[i.label];
        for (const auto& [cls, n] : balance_s) c.require(n == 500, "stratified not balanced");
        for (const auto& [cls, n] : balance_f) c.require(n == 500, "pld-aware not balanced");
        if (distinct_plds(fair) > distinct_plds(strat)) ++wins;
    }
    c.require(wins >= 18, "pld-aware beat stratified in only " + std::to_string(wins) + "/20");

    // hand-traced fair share: plds of size 10/3/1 capped at 6 give 3/2/1
    InstancesByClass trace;
    for (int i = 0; i < 10; ++i) trace["X"].push_back(synthetic_instance("X", "aaa.com", i));
    for (int i = 0; i < 3; ++i) trace["X"].push_back(synthetic_instance("X", "bbb.com", 50 + i));
    trace["X"].push_back(synthetic_instance("X", "ccc.com", 99));
    auto sampled = sample_pld_aware(trace, 6, 1);
    std::map<std::string, int> per_pld;
    for (const auto& i : sampled) ++per_pld[i.node.pld];
    c.require(per_pld["aaa.com"] == 3 && per_pld["bbb.com"] == 2 && per_pld["ccc.com"] == 1,
              "fair-share trace violated");
    return c;
}

// --- 5: classifier oracles -------------------------------------------------

double split_impurity(const std::vector<int>& labels, const std::vector<size_t>& idx, size_t k,
                      SplitCriterion crit) {
    if (idx.empty()) return 0.0;
    std::vector<double> counts(k, 0.0);
    for (size_t i : idx) counts[labels[i]] += 1.0;
    double imp = crit == SplitCriterion::Gini ? 1.0 : 0.0;
    for (double n : counts) {
        if (n == 0.0) continue;
        double p = n / double(idx.size());
        if (crit == SplitCriterion::Gini) imp -= p * p;
        else imp -= p * std::log2(p);
    }
    return imp;
}

Check criterion_classifiers() {
    Check c;
    Rng rng(500);

    // exhaustive root-split enumeration on <=8-instance fixtures
    for (int trial = 0; trial < 400; ++trial) {
        size_t n = 2 + rng.below(7), d = 1 + rng.below(3), k = 2 + rng.below(2);
        TrainData data;
        data.n_classes = k;
        for (size_t i = 0; i < n; ++i) {
            std::vector<double> row;
            for (size_t j = 0; j < d; ++j) row.push_back(double(rng.below(4)));
            data.rows.push_back(row);
            data.labels.push_back(int(rng.below(k)));
        }
        for (auto crit : {SplitCriterion::Gini, SplitCriterion::InformationGain}) {
            std::vector<size_t> all(n);
            for (size_t i = 0; i < n; ++i) all[i] = i;
            double parent = split_impurity(data.labels, all, k, crit);
            int best_f = -1;
            double best_thr = 0.0, best_dec = -1.0;
            for (size_t f = 0; f < d; ++f) {
                std::vector<double> vals;
                for (const auto& row : data.rows) vals.push_back(row[f]);
                std::sort(vals.begin(), vals.end());
                vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                for (size_t v = 0; v + 1 < vals.size(); ++v) {
                    double thr = 0.5 * (vals[v] + vals[v + 1]);
                    std::vector<size_t> l, r;
                    for (size_t i = 0; i < n; ++i)
                        (data.rows[i][f] <= thr ? l : r).push_back(i);
                    double child = double(l.size()) / n * split_impurity(data.labels, l, k, crit) +
                                   double(r.size()) / n * split_impurity(data.labels, r, k, crit);
                    if (parent - child > best_dec) {
                        best_dec = parent - child;
                        best_f = int(f);
                        best_thr = thr;
                    }
                }
            }
            TreeOptions opt;
            opt.criterion = crit;
            auto tree = train_decision_tree(data, opt);
            const auto& root = tree.nodes.front();
            if (parent <= 0.0 || best_f < 0) {
                c.require(root.feature == -1, "root should be a leaf");
            } else {
                c.require(root.feature == best_f && std::fabs(root.threshold - best_thr) < 1e-12,
                          "greedy root split disagrees with enumeration");
            }
        }
    }

    // GNB posteriors vs the direct density formula
    TrainData gdata;
    gdata.n_classes = 3;
    for (int i = 0; i < 90; ++i) {
        int cls = i % 3;
        gdata.rows.push_back({double(cls) * 2.0 + rng.uniform(), rng.uniform(-1.0, 1.0)});
        gdata.labels.push_back(cls);
    }
    auto gnb = train_gnb(gdata);
    Model gm;
    gm.algorithm = "gnb";
    gm.classes = {"0", "1", "2"};
    gm.params = gnb;
    for (const auto& x : gdata.rows) {
        std::vector<double> scores;
        gm.predict(x, &scores);
        for (int cls = 0; cls < 3; ++cls) {
            double direct = gnb.log_prior[cls];
            for (size_t j = 0; j < x.size(); ++j) {
                double var = gnb.variance[cls][j], diff = x[j] - gnb.mean[cls][j];
                direct += -0.5 * std::log(2.0 * M_PI * var) - diff * diff / (2.0 * var);
            }
            c.require(std::fabs(scores[cls] - direct) < 1e-9, "GNB posterior drifted");
        }
    }

    // SVM training accuracy 1.0 on a separable fixture
    TrainData sdata;
    sdata.n_classes = 2;
    for (int i = 0; i < 80; ++i) {
        int cls = i % 2;
        sdata.rows.push_back({(cls == 0 ? -3.0 : 3.0) + rng.uniform(-1.0, 1.0), rng.uniform()});
        sdata.labels.push_back(cls);
    }
    SvmOptions sopt;
    sopt.penalty = 2.0;
    sopt.tolerance = 1e-7;
    Model sm;
    sm.algorithm = "svm";
    sm.classes = {"0", "1"};
    sm.params = train_linear_svm(sdata, sopt, 1).first;
    for (size_t i = 0; i < sdata.rows.size(); ++i)
        c.require(sm.predict(sdata.rows[i]) == sdata.labels[i], "SVM misclassified train point");

    // forest majority-vote conservation on 10^4 random cases
    TrainData fdata;
    fdata.n_classes = 3;
    for (int i = 0; i < 60; ++i) {
        fdata.rows.push_back({rng.uniform(), rng.uniform()});
        fdata.labels.push_back(int(rng.below(3)));
    }
    ForestOptions fopt;
    fopt.n_estimators = 11;
    auto forest = train_random_forest(fdata, fopt, 5);
    Model fm;
    fm.algorithm = "rforest";
    fm.classes = {"0", "1", "2"};
    fm.params = forest;
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> x{rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)};
        std::vector<int> votes(3, 0);
        for (const auto& tree : forest.trees) {
            int cur = 0;
            while (tree.nodes[cur].feature >= 0)
                cur = x[tree.nodes[cur].feature] <= tree.nodes[cur].threshold
                          ? tree.nodes[cur].left
                          : tree.nodes[cur].right;
            ++votes[tree.nodes[cur].leaf_class];
        }
        int argmax = 0;
        for (int cls = 1; cls < 3; ++cls)
            if (votes[cls] > votes[argmax]) argmax = cls;
        c.require(fm.predict(x) == argmax, "forest vote not conserved");
    }
    return c;
}

// --- 6: baseline sanity ----------------------------------------------------

Check criterion_random_baseline() {
    Check c;
    const int n = 100000;
    {
        std::vector<std::string> classes;
        for (int i = 0; i < 8; ++i) classes.push_back("c" + std::to_string(i));
        std::vector<std::string> gold, pred;
        Rng rng(8);
        for (int i = 0; i < n; ++i) {
            gold.push_back(classes[i % 8]);
            pred.push_back(predict_random(classes, rng));
        }
        double f1 = evaluate(pred, gold, classes).macro_f1;
        c.require(std::fabs(f1 - 0.125) < 0.01,
                  "8-class random macro F1 " + std::to_string(f1));
    }
    {
        std::vector<std::string> classes = {"pos", "neg"};
        std::vector<std::string> gold, pred;
        Rng rng(9);
        for (int i = 0; i < n; ++i) {
            gold.push_back(classes[i % 2]);
            pred.push_back(predict_random(classes, rng));
        }
        double f1 = evaluate(pred, gold, classes).macro_f1;
        c.require(std::fabs(f1 - 0.5) < 0.01, "binary random macro F1 " + std::to_string(f1));
    }
    return c;
}

// --- 7 & 8 share the corpus-to-featurized plumbing -------------------------

struct PreparedSplit {
    std::vector<std::string> classes;
    DatasetSplit split;
};

FeaturizedSplit featurize_prepared(const PreparedSplit& p) {
    return featurize_split(p.split, p.classes, vocab(), TaskSpec::events());
}

double forest_macro_f1(const FeaturizedSplit& fs, uint64_t seed, size_t n_estimators = 10) {
    ForestOptions opt;
    opt.n_estimators = n_estimators;
    Model m;
    m.algorithm = "rforest";
    m.classes = fs.classes;
    m.params = train_random_forest(fs.train, opt, seed);
    return evaluate_model(m, fs.test, fs.classes).macro_f1;
}

Check criterion_ordering() {
    Check c;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        SynthSpec spec = default_event_synth_spec();
        spec.nodes_per_class = 300;
        spec.n_plds = 48;  // divisible by the class count: correlated plds partition cleanly
        spec.signal_strength = 0.7;
        spec.pld_class_correlation = 0.8;
        spec.seed = seed;
        auto corpus = generate_synthetic_corpus(spec);
        auto pages = build_pages(assemble_nodes(corpus.quads, psl()));
        SamplingConfig config;
        config.seed = seed;
        auto dataset = build_event_dataset(pages, vocab(), 7, config);
        auto split = split_train_test(dataset, 0.8, seed);
        auto fs = featurize_split(split, dataset.classes, vocab(), TaskSpec::events());

        double rf = forest_macro_f1(fs, seed, 40);

        auto stats = train_sdtype(split.train, vocab(), TaskSpec::events());
        std::vector<std::string> sd_pred, gold;
        for (const auto& inst : split.test) {
            sd_pred.push_back(predict_sdtype(stats, inst.node, vocab(), TaskSpec::events()));
            gold.push_back(inst.label);
        }
        double sd = evaluate(sd_pred, gold, dataset.classes).macro_f1;

        Rng rng(derive_seed(seed, "random-baseline"));
        std::vector<std::string> rnd_pred;
        for (size_t i = 0; i < gold.size(); ++i)
            rnd_pred.push_back(predict_random(dataset.classes, rng));
        double rnd = evaluate(rnd_pred, gold, dataset.classes).macro_f1;

        c.require(rf > sd, "seed " + std::to_string(seed) + ": forest " + std::to_string(rf) +
                               " not above sd-type " + std::to_string(sd));
        c.require(sd > rnd, "seed " + std::to_string(seed) + ": sd-type " + std::to_string(sd) +
                                " not above random " + std::to_string(rnd));
        c.require(rf >= 0.85,
                  "seed " + std::to_string(seed) + ": forest macro F1 " + std::to_string(rf));
    }
    return c;
}

Check criterion_sampling_benefit() {
    Check c;
    size_t wins = 0;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        SynthSpec spec = default_event_synth_spec();
        spec.nodes_per_class = 1000;
        spec.zipf_exponent = 1.6;
        spec.signal_strength = 0.9;
        spec.head_plds = 10;
        spec.head_pld_signal_factor = 0.2;  // head publishers rarely emit the signal property
        spec.head_pld_noise = 0.6;          // and often emit a wrong one
        spec.seed = seed;
        auto corpus = generate_synthetic_corpus(spec);
        auto pages = build_pages(assemble_nodes(corpus.quads, psl()));
        auto by_class = label_events(pages, vocab(), 7, nullptr);

        // tail plds (index >= 25) are held out entirely
        auto held_out = [](const NodeRecord& n) {
            if (n.pld.rfind("site", 0) != 0) return false;
            return std::stoi(n.pld.substr(4)) >= 25;
        };
        InstancesByClass pool;
        std::vector<LabeledInstance> test;
        uint64_t cap = UINT64_MAX;
        for (const auto& [cls, instances] : by_class) {
            for (const auto& inst : instances)
                (held_out(inst.node) ? test : pool[cls]).push_back(inst);
            if (pool.count(cls)) cap = std::min(cap, uint64_t(pool[cls].size()));
        }
        cap = cap * 2 / 5;
        std::vector<std::string> classes;
        for (const auto& [cls, v] : by_class) classes.push_back(cls);

        double scores[2];
        int which = 0;
        for (auto strategy : {SamplingStrategy::Stratified, SamplingStrategy::PldAware}) {
            DatasetSplit split;
            split.train = strategy == SamplingStrategy::Stratified
                              ? sample_stratified(pool, cap, seed)
                              : sample_pld_aware(pool, cap, seed);
            split.test = test;
            auto fs = featurize_split(split, classes, vocab(), TaskSpec::events());
            scores[which++] = forest_macro_f1(fs, seed);
        }
        if (scores[1] >= scores[0]) ++wins;
    }
    c.require(wins >= 4, "pld-aware won only " + std::to_string(wins) + "/5 seeds");
    return c;
}

// --- 9: t-test oracle ------------------------------------------------------

Check criterion_ttest() {
    Check c;
    auto r = paired_ttest({2, 1, 3, 0, 2}, {0, 0, 0, 0, 0});
    c.require(std::fabs(r.t - 3.138) < 1e-3, "t statistic " + std::to_string(r.t));
    c.require(std::fabs(r.p - 0.0349) < 1e-3, "p value " + std::to_string(r.p));
    return c;
}

// --- 10: determinism audit -------------------------------------------------

std::string run_pipeline_once(const std::string& dir) {
    std::filesystem::create_directories(dir);
    SynthSpec spec = default_event_synth_spec();
    spec.nodes_per_class = 120;
    spec.signal_strength = 0.8;
    spec.pld_class_correlation = 0.4;
    spec.seed = 11;
    auto corpus = generate_synthetic_corpus(spec);
    write_synthetic_corpus(corpus, dir + "/corpus.nq", dir + "/gold.tsv");

    auto [quads, parse_report] = parse_nquads_file(dir + "/corpus.nq", ErrorPolicy::SkipAndCount);
    CleansingReport creport;
    auto clean = cleanse_quads(quads, vocab(), UndefinedPolicy::Drop, creport);
    auto pages = build_pages(assemble_nodes(clean, psl()));
    SamplingConfig config;
    config.seed = 21;
    auto dataset = build_event_dataset(pages, vocab(), 7, config);
    write_dataset(dir + "/dataset.jsonl", dir + "/pages.jsonl", dataset);
    auto loaded = read_dataset(dir + "/dataset.jsonl", dir + "/pages.jsonl");

    auto split = split_train_test(loaded, 0.8, 21);
    auto fs = featurize_split(split, loaded.classes, vocab(), TaskSpec::events());
    auto model = fit_model("rforest", {{"n_estimators", "8"}}, fs, 21,
                           content_hash(dir + "/dataset.jsonl"), vocab().version());
    save_model(model, dir + "/model.json");
    auto reloaded = load_model(dir + "/model.json");
    auto report = evaluate_model(reloaded, fs.test, fs.classes);
    report.model_id = content_hash(dir + "/model.json");
    report.dataset_id = content_hash(dir + "/dataset.jsonl");
    report.seed = 21;
    std::ofstream(dir + "/report.json") << report_to_json(report) << "\n";
    std::ifstream in(dir + "/report.json");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Check criterion_determinism() {
    Check c;
    auto a = run_pipeline_once("/tmp/markup_acceptance_run_a");
    auto b = run_pipeline_once("/tmp/markup_acceptance_run_b");
    c.require(!a.empty(), "empty report");
    c.require(a == b, "reports differ between identical runs");
    c.require(content_hash("/tmp/markup_acceptance_run_a/model.json") ==
                  content_hash("/tmp/markup_acceptance_run_b/model.json"),
              "model files differ between identical runs");
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    std::vector<Criterion> criteria = {
        {"parser conformance (200-line fixture, 20 skips, byte-stable round trip)",
         criterion_parser},
        {"cleansing fixtures restored, second pass idempotent", criterion_cleansing},
        {"feature vectors match the worked examples and a brute-force recount",
         criterion_features},
        {"sampling balance, pld coverage, and the fair-share hand trace", criterion_sampling},
        {"classifier oracles (tree enumeration, GNB formula, SVM, forest vote)",
         criterion_classifiers},
        {"random baseline macro F1: 0.125 +/- 0.01 (8-class), 0.50 +/- 0.01 (binary)",
         criterion_random_baseline},
        {"ordering: random forest > sd-type > random, forest >= 0.85", criterion_ordering},
        {"pld-aware sampling helps on held-out plds in >= 4/5 seeds",
         criterion_sampling_benefit},
        {"paired t-test oracle: t ~= 3.138, p ~= 0.0349", criterion_ttest},
        {"determinism: identical runs give identical reports", criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto started = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criteria[i].run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                          .count();
        std::printf("%s  %2zu  %s  (%.1fs)%s%s\n", result.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, result.ok ? "" : " -- ",
                    result.ok ? "" : result.detail.c_str());
        if (!result.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
