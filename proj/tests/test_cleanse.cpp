#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "markup/cleanse.hpp"

using namespace markup;

namespace {

const char* S = "http://schema.org/";

Vocabulary bundled() { return Vocabulary::load("data/schema_org.json"); }

Quad quad(const std::string& pred, const std::string& obj_iri = "") {
    Quad q;
    q.subject = {TermKind::Iri, "http://e.com/a", "", ""};
    q.predicate = pred;
    if (obj_iri.empty())
        q.object = {TermKind::Literal, "x", "", ""};
    else
        q.object = {TermKind::Iri, obj_iri, "", ""};
    q.source_url = "http://e.com/page";
    return q;
}

}  // namespace

TEST_CASE("namespace repair") {
    CHECK(fix_namespace("https://schema.org/name") == std::string(S) + "name");
    CHECK(fix_namespace("http://www.schema.org/name") == std::string(S) + "name");
    CHECK(fix_namespace("http://wwww.dirt-schema.org/name") == std::string(S) + "name");
    CHECK(fix_namespace("http://schema.orgname") == std::string(S) + "name");
    CHECK(fix_namespace("HTTP://SCHEMA.ORG/name") == std::string(S) + "name");
    // non-schema.org IRIs pass through untouched
    CHECK(fix_namespace("http://example.com/schema-ish") == "http://example.com/schema-ish");
    // schema.org as a path segment of another host is not the namespace
    CHECK(fix_namespace("http://mirror.net/schema.org/name") ==
          "http://mirror.net/schema.org/name");
}

TEST_CASE("casing repair against the vocabulary") {
    auto v = bundled();
    CHECK(fix_casing(std::string(S) + "musicevent", v) == std::string(S) + "MusicEvent");
    CHECK(fix_casing(std::string(S) + "STARTDATE", v) == std::string(S) + "startDate");
    // composite WDC-style predicates are repaired partwise
    CHECK(fix_casing(std::string(S) + "event/name", v) == std::string(S) + "Event/name");
    CHECK(fix_casing(std::string(S) + "MUSICEVENT/startdate", v) ==
          std::string(S) + "MusicEvent/startDate");
    // undefined terms stay undefined
    CHECK(fix_casing(std::string(S) + "madeUpTerm", v).empty());
    CHECK(fix_casing(std::string(S) + "Event/madeUpProp", v).empty());
}

TEST_CASE("cleanse_quads repairs, counts, and is idempotent") {
    auto v = bundled();
    std::vector<Quad> quads = {
        quad("https://schema.org/name"),
        quad(std::string(S) + "event/name"),
        quad(kRdfType, "https://schema.org/musicevent"),
        quad("http://other.org/prop"),
    };
    CleansingReport r1;
    auto clean = cleanse_quads(quads, v, UndefinedPolicy::Drop, r1);
    CHECK(clean.size() == 4);
    CHECK(r1.namespace_fixes == 2);
    CHECK(r1.casing_fixes == 2);
    CHECK(clean[0].predicate == std::string(S) + "name");
    CHECK(clean[1].predicate == std::string(S) + "Event/name");
    CHECK(clean[2].object.value == std::string(S) + "MusicEvent");
    CHECK(clean[3].predicate == "http://other.org/prop");

    CleansingReport r2;
    auto again = cleanse_quads(clean, v, UndefinedPolicy::Drop, r2);
    CHECK(again == clean);
    CHECK(r2.namespace_fixes == 0);
    CHECK(r2.casing_fixes == 0);
    CHECK(r2.dropped_undefined == 0);
}

TEST_CASE("undefined terms drop or flag by policy") {
    auto v = bundled();
    std::vector<Quad> quads = {
        quad(std::string(S) + "name"),
        quad(std::string(S) + "notAProperty"),
        quad(kRdfType, std::string(S) + "NotAType"),
    };
    CleansingReport drop;
    auto dropped = cleanse_quads(quads, v, UndefinedPolicy::Drop, drop);
    CHECK(dropped.size() == 1);
    CHECK(drop.dropped_undefined == 2);
    CHECK(drop.quads_out == 1);

    CleansingReport keep;
    auto kept = cleanse_quads(quads, v, UndefinedPolicy::Keep, keep);
    CHECK(kept.size() == 3);
    CHECK(keep.flagged_undefined == 2);
    CHECK(keep.dropped_undefined == 0);
}

TEST_CASE("after drop-cleansing every schema.org term is canonical") {
    auto v = bundled();
    std::vector<Quad> quads = {
        quad("https://schema.org/NAME"), quad(std::string(S) + "bogus"),
        quad(kRdfType, "http://www.schema.org/businessevent"), quad("http://other.org/p")};
    CleansingReport r;
    for (const auto& q : cleanse_quads(quads, v, UndefinedPolicy::Drop, r)) {
        if (is_schema_org(q.predicate))
            CHECK((v.has_property(q.predicate) || !fix_casing(q.predicate, v).empty()));
        if (q.predicate == kRdfType && q.object.kind == TermKind::Iri &&
            is_schema_org(q.object.value))
            CHECK(v.has_type(q.object.value));
    }
}
