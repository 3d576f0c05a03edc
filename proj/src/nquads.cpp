#include "markup/nquads.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

namespace markup {

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    uint64_t line_no;

    explicit Cursor(std::string_view sv, uint64_t ln) : s(sv), line_no(ln) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, msg); }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char take() {
        if (eof()) fail("unexpected end of line");
        return s[pos++];
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
};

void append_utf8(std::string& out, uint32_t cp) {
    if (cp <= 0x7f) {
        out.push_back(char(cp));
    } else if (cp <= 0x7ff) {
        out.push_back(char(0xc0 | (cp >> 6)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    } else if (cp <= 0xffff) {
        out.push_back(char(0xe0 | (cp >> 12)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(char(0xf0 | (cp >> 18)));
        out.push_back(char(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    }
}

uint32_t parse_hex(Cursor& c, int digits) {
    uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
        char ch = c.take();
        v <<= 4;
        if (ch >= '0' && ch <= '9') v |= uint32_t(ch - '0');
        else if (ch >= 'a' && ch <= 'f') v |= uint32_t(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') v |= uint32_t(ch - 'A' + 10);
        else c.fail("bad hex digit in escape");
    }
    return v;
}

// Resolves an ECHAR/UCHAR escape after the backslash was consumed.
void parse_escape(Cursor& c, std::string& out, bool in_iri) {
    char ch = c.take();
    if (in_iri && ch != 'u' && ch != 'U') c.fail("only \\u/\\U escapes allowed in IRIs");
    switch (ch) {
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 'f': out.push_back('\f'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case '\\': out.push_back('\\'); break;
        case 'u': append_utf8(out, parse_hex(c, 4)); break;
        case 'U': append_utf8(out, parse_hex(c, 8)); break;
        default: c.fail(std::string("bad escape \\") + ch);
    }
}

std::string parse_iri(Cursor& c) {
    if (c.take() != '<') c.fail("expected '<'");
    std::string out;
    for (;;) {
        char ch = c.take();
        if (ch == '>') break;
        if (ch == '\\') {
            parse_escape(c, out, true);
            continue;
        }
        if (ch == ' ' || ch == '"' || ch == '{' || ch == '}' || ch == '|' || ch == '^' ||
            ch == '`' || (unsigned char)ch < 0x21)
            c.fail("illegal character in IRI");
        out.push_back(ch);
    }
    if (out.empty()) c.fail("empty IRI");
    return out;
}

std::string parse_blank_label(Cursor& c) {
    if (c.take() != '_' || c.take() != ':') c.fail("expected blank node label");
    std::string out;
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t') break;
        if (ch == '<' || ch == '"') c.fail("illegal character in blank node label");
        out.push_back(ch);
        ++c.pos;
    }
    if (out.empty()) c.fail("empty blank node label");
    // a trailing '.' belongs to the statement terminator, not the label
    if (out.size() > 1 && out.back() == '.') {
        out.pop_back();
        --c.pos;
    }
    return out;
}

Term parse_subject(Cursor& c) {
    if (c.peek() == '<') return Term{TermKind::Iri, parse_iri(c), {}, {}};
    return Term{TermKind::Blank, parse_blank_label(c), {}, {}};
}

Term parse_object(Cursor& c) {
    if (c.peek() == '<') return Term{TermKind::Iri, parse_iri(c), {}, {}};
    if (c.peek() == '_') return Term{TermKind::Blank, parse_blank_label(c), {}, {}};
    if (c.peek() != '"') c.fail("expected IRI, blank node or literal as object");
    c.take();
    Term t;
    t.kind = TermKind::Literal;
    for (;;) {
        char ch = c.take();
        if (ch == '"') break;
        if (ch == '\\') {
            parse_escape(c, t.value, false);
            continue;
        }
        if (ch == '\n' || ch == '\r') c.fail("unterminated literal");
        t.value.push_back(ch);
    }
    if (c.peek() == '@') {
        c.take();
        while (!c.eof()) {
            char ch = c.peek();
            if (!(std::isalnum((unsigned char)ch) || ch == '-')) break;
            t.lang.push_back(ch);
            ++c.pos;
        }
        if (t.lang.empty()) c.fail("empty language tag");
    } else if (c.peek() == '^') {
        c.take();
        if (c.take() != '^') c.fail("expected '^^'");
        t.datatype = parse_iri(c);
    }
    return t;
}

bool is_absolute_url_with_host(const std::string& url) {
    size_t scheme = url.find("://");
    if (scheme == std::string::npos || scheme == 0) return false;
    size_t host_start = scheme + 3;
    size_t host_end = url.find_first_of("/?#", host_start);
    if (host_end == std::string::npos) host_end = url.size();
    return host_end > host_start;
}

void escape_into(std::string& out, const std::string& s) {
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    out += "\\u00";
                    out.push_back(hex[ch >> 4]);
                    out.push_back(hex[ch & 0xf]);
                } else {
                    out.push_back(char(ch));
                }
        }
    }
}

}  // namespace

Quad parse_nquads_line(std::string_view line, uint64_t line_no) {
    Cursor c(line, line_no);
    c.skip_ws();
    Quad q;
    q.subject = parse_subject(c);
    c.skip_ws();
    q.predicate = parse_iri(c);
    c.skip_ws();
    q.object = parse_object(c);
    c.skip_ws();
    if (c.peek() != '<') c.fail("expected graph label (source URL)");
    q.source_url = parse_iri(c);
    if (!is_absolute_url_with_host(q.source_url))
        c.fail("graph label is not an absolute URL with a host");
    c.skip_ws();
    if (c.eof() || c.take() != '.') c.fail("expected terminating '.'");
    c.skip_ws();
    if (!c.eof() && c.peek() != '#') c.fail("trailing content after '.'");
    return q;
}

std::string to_nquads(const Term& t) {
    std::string out;
    switch (t.kind) {
        case TermKind::Iri:
            out.push_back('<');
            out += t.value;
            out.push_back('>');
            break;
        case TermKind::Blank:
            out += "_:";
            out += t.value;
            break;
        case TermKind::Literal:
            out.push_back('"');
            escape_into(out, t.value);
            out.push_back('"');
            if (!t.lang.empty()) {
                out.push_back('@');
                out += t.lang;
            } else if (!t.datatype.empty()) {
                out += "^^<";
                out += t.datatype;
                out.push_back('>');
            }
            break;
    }
    return out;
}

std::string to_nquads(const Quad& q) {
    std::string out = to_nquads(q.subject);
    out.push_back(' ');
    out.push_back('<');
    out += q.predicate;
    out.push_back('>');
    out.push_back(' ');
    out += to_nquads(q.object);
    out.push_back(' ');
    out.push_back('<');
    out += q.source_url;
    out.push_back('>');
    out += " .";
    return out;
}

ParseReport parse_nquads(std::istream& in, ErrorPolicy policy,
                         const std::function<void(Quad&&)>& sink) {
    ParseReport report;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        ++report.lines;
        try {
            Quad q = parse_nquads_line(line, line_no);
            ++report.quads;
            sink(std::move(q));
        } catch (const ParseError&) {
            if (policy == ErrorPolicy::Abort) throw;
            ++report.skipped;
        }
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading N-Quads input");
    return report;
}

std::pair<std::vector<Quad>, ParseReport> parse_nquads(std::istream& in, ErrorPolicy policy) {
    std::vector<Quad> quads;
    ParseReport report = parse_nquads(in, policy, [&](Quad&& q) { quads.push_back(std::move(q)); });
    return {std::move(quads), report};
}

namespace {

// istream over a gzip file via zlib.
class GzStreamBuf : public std::streambuf {
public:
    explicit GzStreamBuf(const std::string& path) : file_(gzopen(path.c_str(), "rb")) {
        if (!file_) throw std::runtime_error("cannot open file: " + path);
        setg(buf_.data(), buf_.data(), buf_.data());
    }
    ~GzStreamBuf() override {
        if (file_) gzclose(file_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        int n = gzread(file_, buf_.data(), int(buf_.size()));
        if (n < 0) throw std::runtime_error("gzip read error");
        if (n == 0) return traits_type::eof();
        setg(buf_.data(), buf_.data(), buf_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_;
    std::array<char, 1 << 16> buf_;
};

class GzIStream : public std::istream {
public:
    explicit GzIStream(const std::string& path) : std::istream(nullptr), buf_(path) {
        rdbuf(&buf_);
    }

private:
    GzStreamBuf buf_;
};

}  // namespace

std::unique_ptr<std::istream> open_quad_stream(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw std::runtime_error("cannot open file: " + path);
    unsigned char magic[2] = {0, 0};
    probe.read(reinterpret_cast<char*>(magic), 2);
    bool gz = probe.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
    probe.close();
    if (gz) return std::make_unique<GzIStream>(path);
    auto s = std::make_unique<std::ifstream>(path, std::ios::binary);
    return s;
}

std::pair<std::vector<Quad>, ParseReport> parse_nquads_file(const std::string& path,
                                                            ErrorPolicy policy) {
    auto stream = open_quad_stream(path);
    return parse_nquads(*stream, policy);
}

}  // namespace markup
