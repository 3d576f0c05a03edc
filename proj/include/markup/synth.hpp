#ifndef MARKUP_SYNTH_HPP
#define MARKUP_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "markup/nquads.hpp"

namespace markup {

// One synthetic class: the rdf:type local name it is generated with and the
// schema.org property that discriminates it.
struct SynthClassSpec {
    std::string type_local;       // e.g. "MusicEvent"
    std::string signal_property;  // e.g. "composer" (local name)
};

struct SynthSpec {
    std::vector<SynthClassSpec> classes;
    size_t nodes_per_class = 100;
    size_t n_plds = 50;
    double zipf_exponent = 1.0;        // pld popularity skew
    double signal_strength = 1.0;      // P(signal property present)
    double pld_class_correlation = 0.0;  // fraction of nodes on class-preferred plds
    double head_pld_signal_factor = 1.0;  // multiplies signal strength on head plds
    double head_pld_noise = 0.0;  // P(a head-pld node carries another class's signal property)
    size_t head_plds = 0;         // how many top pld indices count as "head"
    uint64_t seed = 0;
};

struct SyntheticCorpus {
    std::vector<Quad> quads;
    // (node_id, class label) per generated node, in generation order
    std::vector<std::pair<std::string, std::string>> gold;
};

// Deterministic per seed. Every node gets rdf:type, s:name, a few common
// properties, and - with probability signal_strength (attenuated on head
// plds) - its class's signal property. pld popularity is Zipf over n_plds;
// with probability pld_class_correlation the Zipf rank is rotated into a
// class-preferred region, which correlates pld with class.
SyntheticCorpus generate_synthetic_corpus(const SynthSpec& spec);

// Default 8-class event setup used by the CLI and the acceptance fixtures.
SynthSpec default_event_synth_spec();

void write_synthetic_corpus(const SyntheticCorpus& corpus, const std::string& quads_path,
                            const std::string& gold_path);
std::vector<std::pair<std::string, std::string>> read_gold_sidecar(const std::string& path);

}  // namespace markup

#endif
