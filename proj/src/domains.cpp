#include "markup/domains.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace markup {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_labels(const std::string& host) {
    std::vector<std::string> labels;
    size_t start = 0;
    for (;;) {
        size_t dot = host.find('.', start);
        if (dot == std::string::npos) {
            labels.push_back(host.substr(start));
            return labels;
        }
        labels.push_back(host.substr(start, dot - start));
        start = dot + 1;
    }
}

bool is_ipv4(const std::string& host) {
    int dots = 0;
    for (char c : host) {
        if (c == '.') ++dots;
        else if (!std::isdigit((unsigned char)c)) return false;
    }
    return dots == 3;
}

bool is_ip_literal(const std::string& host) {
    if (host.empty()) return false;
    if (host.front() == '[') return true;  // IPv6 bracket form
    return is_ipv4(host);
}

}  // namespace

PublicSuffixList PublicSuffixList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open public suffix snapshot: " + path);
    PublicSuffixList psl;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.rfind("//", 0) == 0) {
            if (line.rfind("// version:", 0) == 0 && psl.version_.empty()) {
                std::string v = line.substr(11);
                size_t vf = v.find_first_not_of(' ');
                psl.version_ = vf == std::string::npos ? "" : v.substr(vf);
            }
            continue;
        }
        size_t end = line.find_first_of(" \t");
        psl.add_rule(to_lower(line.substr(0, end)));
    }
    return psl;
}

void PublicSuffixList::add_rule(const std::string& rule) {
    if (rule.empty()) return;
    if (rule[0] == '!') exception_rules_.insert(rule.substr(1));
    else if (rule.rfind("*.", 0) == 0) wildcard_rules_.insert(rule.substr(2));
    else rules_.insert(rule);
}

std::string PublicSuffixList::public_suffix(const std::string& host) const {
    std::vector<std::string> labels = split_labels(host);
    // Per the PSL algorithm an exception rule wins and its suffix is the rule
    // with the first label removed.
    for (size_t i = 0; i < labels.size(); ++i) {
        std::string candidate;
        for (size_t j = i; j < labels.size(); ++j) {
            if (j > i) candidate.push_back('.');
            candidate += labels[j];
        }
        if (exception_rules_.count(candidate)) {
            size_t dot = candidate.find('.');
            return dot == std::string::npos ? std::string() : candidate.substr(dot + 1);
        }
    }
    std::string best;
    for (size_t i = 0; i < labels.size(); ++i) {
        std::string candidate;
        for (size_t j = i; j < labels.size(); ++j) {
            if (j > i) candidate.push_back('.');
            candidate += labels[j];
        }
        bool match = rules_.count(candidate) > 0;
        // "*.foo" matches exactly one extra label in front of "foo"
        if (!match) {
            size_t dot = candidate.find('.');
            if (dot != std::string::npos && wildcard_rules_.count(candidate.substr(dot + 1)))
                match = true;
        }
        if (match && candidate.size() > best.size()) best = candidate;
    }
    return best;
}

std::string url_host(const std::string& url) {
    size_t scheme = url.find("://");
    if (scheme == std::string::npos) throw std::runtime_error("URL is not absolute: " + url);
    size_t start = scheme + 3;
    size_t end = url.find_first_of("/?#", start);
    if (end == std::string::npos) end = url.size();
    std::string authority = url.substr(start, end - start);
    // strip userinfo and port (but keep [ipv6] intact)
    size_t at = authority.rfind('@');
    if (at != std::string::npos) authority = authority.substr(at + 1);
    if (!authority.empty() && authority.front() == '[') {
        size_t close = authority.find(']');
        if (close != std::string::npos) authority = authority.substr(0, close + 1);
    } else {
        size_t colon = authority.find(':');
        if (colon != std::string::npos) authority = authority.substr(0, colon);
    }
    if (authority.empty()) throw std::runtime_error("URL has no host: " + url);
    return to_lower(authority);
}

PldTld extract_pld_tld(const std::string& url, const PublicSuffixList& psl) {
    std::string host = url_host(url);
    if (is_ip_literal(host)) return {host, "", true};
    std::string suffix = psl.public_suffix(host);
    if (suffix.empty() || suffix.size() >= host.size()) return {host, "", true};
    // registrable domain = suffix plus the label immediately before it
    size_t cut = host.size() - suffix.size() - 1;  // position of the dot
    if (host[cut] != '.') return {host, "", true};
    size_t label_start = host.rfind('.', cut - 1);
    label_start = label_start == std::string::npos ? 0 : label_start + 1;
    return {host.substr(label_start), "." + suffix, false};
}

PldTld extract_pld_tld_heuristic(const std::string& url) {
    std::string host = url_host(url);
    if (is_ip_literal(host)) return {host, "", true};
    std::vector<std::string> labels = split_labels(host);
    if (labels.size() < 2) return {host, "", true};
    return {labels[labels.size() - 2] + "." + labels.back(), "." + labels.back(), false};
}

}  // namespace markup
