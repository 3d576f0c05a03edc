#include "markup/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "markup/rng.hpp"
#include "markup/vocab.hpp"

namespace markup {

SynthSpec default_event_synth_spec() {
    SynthSpec spec;
    spec.classes = {{"MusicEvent", "composer"},      {"SportsEvent", "performer"},
                    {"BusinessEvent", "organizer"},  {"LiteraryEvent", "translator"},
                    {"SaleEvent", "offers"},         {"TheaterEvent", "eventStatus"},
                    {"Festival", "endDate"},         {"EducationEvent", "location"}};
    return spec;
}

namespace {

const char* kCommonProps[] = {"name", "url", "description", "image", "startDate"};

// inverse-CDF sample of a Zipf(exponent) rank over [0, n)
struct ZipfSampler {
    std::vector<double> cdf;
    explicit ZipfSampler(size_t n, double exponent) {
        cdf.resize(n);
        double total = 0.0;
        for (size_t i = 0; i < n; ++i) {
            total += std::pow(double(i + 1), -exponent);
            cdf[i] = total;
        }
        for (double& c : cdf) c /= total;
    }
    size_t draw(Rng& rng) const {
        double u = rng.uniform();
        return size_t(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
};

Term literal(const std::string& value) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = value;
    return t;
}

Term iri(const std::string& value) {
    Term t;
    t.kind = TermKind::Iri;
    t.value = value;
    return t;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(const SynthSpec& spec) {
    if (spec.classes.empty()) throw std::runtime_error("synthetic spec needs classes");
    if (spec.n_plds == 0) throw std::runtime_error("synthetic spec needs plds");
    if (spec.signal_strength < 0.0 || spec.signal_strength > 1.0)
        throw std::runtime_error("signal strength outside [0,1]");

    ZipfSampler zipf(spec.n_plds, spec.zipf_exponent);
    size_t k = spec.classes.size();
    SyntheticCorpus corpus;

    for (size_t c = 0; c < k; ++c) {
        const auto& cls = spec.classes[c];
        Rng rng(derive_seed(spec.seed, "class/" + cls.type_local));
        for (size_t i = 0; i < spec.nodes_per_class; ++i) {
            size_t rank = zipf.draw(rng);
            size_t pld_index = rank;
            if (rng.uniform() < spec.pld_class_correlation)
                pld_index = (rank * k + c) % spec.n_plds;
            std::string pld = "site" + std::to_string(pld_index) + ".com";
            std::string page = "http://" + pld + "/" + cls.type_local + "/" +
                               std::to_string(i) + ".html";
            std::string subject = page + "#entity";

            auto emit = [&](const std::string& prop_local, const Term& object) {
                corpus.quads.push_back(
                    {iri(subject), kSchemaPrefix + prop_local, object, page});
            };
            corpus.quads.push_back(
                {iri(subject), kRdfType, iri(kSchemaPrefix + cls.type_local), page});
            emit("name", literal(cls.type_local + " entity " + std::to_string(i)));

            size_t n_common = 1 + rng.below(3);
            for (size_t j = 0; j < n_common; ++j)
                emit(kCommonProps[rng.below(std::size(kCommonProps))], literal("v"));

            double signal = spec.signal_strength;
            bool head = pld_index < spec.head_plds;
            if (head) signal *= spec.head_pld_signal_factor;
            if (rng.uniform() < signal)
                emit(cls.signal_property, literal("s"));
            if (head && k > 1 && rng.uniform() < spec.head_pld_noise) {
                size_t other = (c + 1 + rng.below(k - 1)) % k;
                emit(spec.classes[other].signal_property, literal("s"));
            }

            corpus.gold.emplace_back(subject + "\t" + page, cls.type_local);
        }
    }
    return corpus;
}

void write_synthetic_corpus(const SyntheticCorpus& corpus, const std::string& quads_path,
                            const std::string& gold_path) {
    std::ofstream quads(quads_path);
    if (!quads) throw std::runtime_error("cannot write " + quads_path);
    for (const auto& q : corpus.quads) quads << to_nquads(q) << '\n';
    std::ofstream gold(gold_path);
    if (!gold) throw std::runtime_error("cannot write " + gold_path);
    for (const auto& [id, label] : corpus.gold) gold << id << '\t' << label << '\n';
}

std::vector<std::pair<std::string, std::string>> read_gold_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> gold;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t last = line.find_last_of('\t');
        if (last == std::string::npos) throw std::runtime_error("malformed gold line: " + line);
        gold.emplace_back(line.substr(0, last), line.substr(last + 1));
    }
    return gold;
}

}  // namespace markup
