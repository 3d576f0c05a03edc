#ifndef MARKUP_DOMAINS_HPP
#define MARKUP_DOMAINS_HPP

#include <string>
#include <unordered_set>

namespace markup {

struct PldTld {
    std::string pld;   // registrable domain, lowercase (e.g. "touristlink.com")
    std::string tld;   // public suffix with leading dot (e.g. ".com"), empty if none
    bool flagged = false;  // IP-literal host or no matching public suffix
};

// Public-suffix snapshot. Supports normal rules, wildcard rules ("*.ck")
// and exceptions ("!www.ck").
class PublicSuffixList {
public:
    PublicSuffixList() = default;

    // Loads a snapshot in the standard PSL text format (one rule per line,
    // "//" comments). Throws std::runtime_error if the file is unreadable.
    static PublicSuffixList load(const std::string& path);

    void add_rule(const std::string& rule);
    bool empty() const { return rules_.empty() && wildcard_rules_.empty(); }
    const std::string& version() const { return version_; }

    // Longest matching public suffix of a lowercase host, or empty string.
    std::string public_suffix(const std::string& host) const;

private:
    std::unordered_set<std::string> rules_;
    std::unordered_set<std::string> wildcard_rules_;   // stored without the "*."
    std::unordered_set<std::string> exception_rules_;  // stored without the "!"
    std::string version_;
};

// Extracts host from an absolute URL, lowercased. Throws on URLs without a
// host.
std::string url_host(const std::string& url);

// pld/tld of the URL's host per the suffix list. IP-literal hosts and hosts
// with no matching public suffix yield pld = full host, tld = "", flagged.
PldTld extract_pld_tld(const std::string& url, const PublicSuffixList& psl);

// Fallback used when no snapshot is available: last two labels form the pld,
// last label the suffix. Results differ from snapshot-based extraction.
PldTld extract_pld_tld_heuristic(const std::string& url);

}  // namespace markup

#endif
