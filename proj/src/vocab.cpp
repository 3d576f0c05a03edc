#include "markup/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace markup {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

}  // namespace

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vocabulary snapshot: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

Vocabulary Vocabulary::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Vocabulary v;
    v.version_ = j.value("version", "unversioned");

    for (const auto& t : j.at("types")) {
        std::string iri = t.at("iri").get<std::string>();
        if (v.parents_.count(iri))
            throw std::runtime_error("duplicate type in snapshot: " + iri);
        v.parents_[iri] = t.value("parents", std::vector<std::string>{});
        std::string key = to_lower(iri);
        if (v.canonical_types_.count(key))
            throw std::runtime_error("duplicate canonical type key: " + key);
        v.canonical_types_[key] = iri;
    }
    for (const auto& [iri, parents] : v.parents_) {
        for (const auto& p : parents)
            if (!v.parents_.count(p))
                throw std::runtime_error("unknown parent type: " + p + " of " + iri);
    }
    // cycle check: repeated parent-chasing with a visited set per type
    for (const auto& [iri, _] : v.parents_) {
        std::unordered_set<std::string> seen;
        std::vector<std::string> stack{iri};
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            for (const auto& p : v.parents_.at(cur)) {
                if (p == iri) throw std::runtime_error("hierarchy cycle through " + iri);
                if (seen.insert(p).second) stack.push_back(p);
            }
        }
    }

    for (const auto& p : j.at("properties")) {
        std::string iri = p.at("iri").get<std::string>();
        if (v.properties_.count(iri))
            throw std::runtime_error("duplicate property in snapshot: " + iri);
        v.properties_.insert(iri);
        std::string key = to_lower(iri);
        if (v.canonical_props_.count(key))
            throw std::runtime_error("duplicate canonical property key: " + key);
        v.canonical_props_[key] = iri;
        for (const auto& d : p.value("domain", std::vector<std::string>{}))
            v.domain_of_[iri].insert(d);
        for (const auto& r : p.value("range", std::vector<std::string>{}))
            v.range_of_[iri].insert(r);
    }
    return v;
}

std::optional<std::string> Vocabulary::canonical_type(const std::string& raw_iri) const {
    auto it = canonical_types_.find(to_lower(raw_iri));
    if (it == canonical_types_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Vocabulary::canonical_property(const std::string& raw_iri) const {
    auto it = canonical_props_.find(to_lower(raw_iri));
    if (it == canonical_props_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Vocabulary::canonical_term(const std::string& raw_iri) const {
    if (has_type(raw_iri) || has_property(raw_iri)) return raw_iri;
    if (auto t = canonical_type(raw_iri)) return t;
    return canonical_property(raw_iri);
}

bool Vocabulary::is_subtype(const std::string& t1, const std::string& t2) const {
    if (!parents_.count(t1)) throw std::runtime_error("unknown type: " + t1);
    if (!parents_.count(t2)) throw std::runtime_error("unknown type: " + t2);
    if (t1 == t2) return true;
    std::unordered_set<std::string> seen;
    std::vector<std::string> stack{t1};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& p : parents_.at(cur)) {
            if (p == t2) return true;
            if (seen.insert(p).second) stack.push_back(p);
        }
    }
    return false;
}

const std::vector<std::string>& Vocabulary::parents(const std::string& type) const {
    auto it = parents_.find(type);
    if (it == parents_.end()) throw std::runtime_error("unknown type: " + type);
    return it->second;
}

std::vector<std::string> Vocabulary::subtypes_of(const std::string& type) const {
    std::vector<std::string> out;
    for (const auto& [iri, _] : parents_)
        if (iri != type && is_subtype(iri, type)) out.push_back(iri);
    std::sort(out.begin(), out.end());
    return out;
}

const std::set<std::string>& Vocabulary::domain_of(const std::string& property) const {
    static const std::set<std::string> kEmpty;
    auto it = domain_of_.find(property);
    return it == domain_of_.end() ? kEmpty : it->second;
}

const std::set<std::string>& Vocabulary::range_of(const std::string& property) const {
    static const std::set<std::string> kEmpty;
    auto it = range_of_.find(property);
    return it == range_of_.end() ? kEmpty : it->second;
}

std::string Vocabulary::local_name(const std::string& iri) {
    size_t pos = iri.find_last_of("/#");
    return pos == std::string::npos ? iri : iri.substr(pos + 1);
}

}  // namespace markup
