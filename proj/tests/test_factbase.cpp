#include "hvlab/factbase.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace hvlab;

namespace {
HVector hv(const char* text) { return HVector::parse(text); }
}

TEST_CASE("seed lookups") {
    const FactSet fs = seed_paper_facts();
    auto rec = fs.find(hv("1,13,12,13,1"));
    REQUIRE(rec);
    CHECK(rec->status == Status::Gorenstein);
    CHECK(rec->provenance->kind == Provenance::Kind::Citation);

    rec = fs.find(hv("1,16,14,14,16,1"));
    REQUIRE(rec);
    CHECK(rec->status == Status::NotGorenstein);
    CHECK(rec->provenance->kind == Provenance::Kind::Citation);

    rec = fs.find(hv("1,19,17,19,1"));
    REQUIRE(rec);
    CHECK(rec->status == Status::Open);

    rec = fs.find(hv("1,17,16,16,17,1"));
    REQUIRE(rec);
    CHECK(rec->status == Status::Gorenstein);
    REQUIRE(rec->provenance->kind == Provenance::Kind::TrivialExtensionOf);
    CHECK(*rec->provenance->source == hv("1,3,6,10,14"));

    rec = fs.find(hv("1,12,11,12,1"));
    REQUIRE(rec);
    CHECK(rec->status == Status::NotGorenstein);
    CHECK(rec->provenance->kind == Provenance::Kind::Certificate);

    // the citation-only view drops exactly the five certificate records
    CHECK(seed_citation_facts().size() + 5 == fs.size());
    CHECK_FALSE(seed_citation_facts().contains(hv("1,12,11,12,1")));
}

TEST_CASE("add_fact precedence and conflicts") {
    FactSet fs;
    const FactRecord gor{hv("1,14,13,14,1"), Status::Gorenstein,
                         Provenance::citation("anchor")};
    fs = add_fact(fs, gor);
    const std::size_t n = fs.size();
    fs = add_fact(fs, gor);  // idempotent
    CHECK(fs.size() == n);

    CHECK_THROWS_AS(add_fact(fs, {hv("1,14,13,14,1"), Status::NotGorenstein,
                                  Provenance::citation("other")}),
                    StatusConflict);

    // Open never downgrades
    fs = add_fact(fs, {hv("1,14,13,14,1"), Status::Open, std::nullopt});
    CHECK(fs.find(hv("1,14,13,14,1"))->status == Status::Gorenstein);

    // Open upgrades to concrete
    fs = add_fact(fs, {hv("1,18,16,18,1"), Status::Open, std::nullopt});
    fs = add_fact(fs, {hv("1,18,16,18,1"), Status::Gorenstein, Provenance::citation("x")});
    CHECK(fs.find(hv("1,18,16,18,1"))->status == Status::Gorenstein);

    // the status invariant is enforced: (1,13,4,13,1) is not an O-sequence
    CHECK_THROWS_AS(add_fact(fs, {hv("1,13,4,13,1"), Status::NotGorenstein,
                                  Provenance::citation("bad")}),
                    DomainError);
    CHECK_THROWS_AS(add_fact(fs, {hv("1,13,12,13,1"), Status::NotOSequence,
                                  Provenance::citation("bad")}),
                    DomainError);
    // non-Open records need provenance
    CHECK_THROWS_AS(add_fact(fs, {hv("1,13,13,13,1"), Status::Gorenstein, std::nullopt}),
                    DomainError);
}

TEST_CASE("closure derives the expected chains") {
    const FactSet fs = apply_closure(seed_paper_facts(), 30);

    // upward from (1,13,12,13,1)
    for (const char* text : {"1,14,13,14,1", "1,15,14,15,1", "1,16,15,16,1", "1,17,16,17,1"}) {
        auto rec = fs.find(hv(text));
        REQUIRE_MESSAGE(rec, text);
        CHECK(rec->status == Status::Gorenstein);
    }
    // downward from (1,17,15,17,1)
    for (const char* text : {"1,16,14,16,1", "1,15,13,15,1", "1,14,12,14,1", "1,13,11,13,1"}) {
        auto rec = fs.find(hv(text));
        REQUIRE_MESSAGE(rec, text);
        CHECK(rec->status == Status::NotGorenstein);
    }
    // the cited fact behind the H1 argument
    CHECK(fs.find(hv("1,11,10,11,1"))->status == Status::NotGorenstein);
    // the socle-degree-5 chain from (1,18,16,16,18,1)
    for (Nat r = 18; r <= 25; ++r)
        CHECK(status_of(fs, symmetric_candidate(5, r, r - 2)) == Status::Gorenstein);
    // unimodal facts materialized
    CHECK(fs.find(hv("1,12,12,12,1"))->status == Status::Gorenstein);
    // open seeds survive closure untouched
    CHECK(fs.find(hv("1,19,17,19,1"))->status == Status::Open);
    CHECK(fs.find(hv("1,28,24,24,28,1"))->status == Status::Open);
}

TEST_CASE("closure is monotone and idempotent") {
    const FactSet seeds = seed_paper_facts();
    const FactSet once = apply_closure(seeds, 30);
    const FactSet twice = apply_closure(once, 30);
    CHECK(once.size() >= seeds.size());
    REQUIRE(once.size() == twice.size());
    std::size_t compared = 0;
    for (const auto& [key, rec] : once.records()) {
        const auto other = twice.records().find(key);
        REQUIRE(other != twice.records().end());
        CHECK(other->second.status == rec.status);
        CHECK(other->second.provenance == rec.provenance);
        ++compared;
    }
    CHECK(compared == once.size());

    // seeds are never removed
    for (const auto& [key, rec] : seeds.records())
        CHECK(once.records().count(key) == 1);
}

TEST_CASE("status_of") {
    const FactSet fs = apply_closure(seed_paper_facts(), 30);
    CHECK(status_of(fs, hv("1,13,4,13,1")) == Status::NotOSequence);
    CHECK(status_of(fs, hv("1,12,12,12,1")) == Status::Gorenstein);
    CHECK(status_of(fs, hv("1,12,11,12,1")) == Status::NotGorenstein);
    CHECK(status_of(fs, hv("1,19,17,19,1")) == Status::Open);
    // unimodal rule applies beyond the closure bound
    CHECK(status_of(fs, symmetric_candidate(4, 40, 45)) == Status::Gorenstein);
    // socle degree 3 carries no facts or rules
    CHECK(status_of(fs, hv("1,8,8,1")) == Status::Open);
}

TEST_CASE("export/import round trip") {
    const FactSet seeds = seed_paper_facts();
    const std::string text = export_facts(seeds);
    CHECK(text.rfind("hvfacts-v1\n", 0) == 0);
    CHECK(text == export_facts(seeds));  // determinism

    const FactSet back = import_facts(text);
    REQUIRE(back.size() == seeds.size());
    CHECK(export_facts(back) == text);
    for (const auto& [key, rec] : seeds.records()) {
        const auto other = back.records().find(key);
        REQUIRE(other != back.records().end());
        CHECK(other->second.status == rec.status);
        CHECK(other->second.provenance == rec.provenance);
    }
}

TEST_CASE("the shipped fact file matches the built-in seeds") {
    std::ifstream in(std::string(HVLAB_DATA_DIR) + "/facts/seed.facts", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == export_facts(seed_paper_facts()));
}

TEST_CASE("import rejects malformed input") {
    CHECK_THROWS_AS(import_facts("not-a-header\n"), ParseError);
    CHECK_THROWS_WITH_AS(
        import_facts("hvfacts-v1\nhvector=1,2,1 status=G prov=citation:\"x\" extra=1\n"),
        doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(import_facts("hvfacts-v1\nhvector=1,2,1 status=Q\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(import_facts("hvfacts-v1\n"
                                 "hvector=1,14,13,14,1 status=G prov=citation:\"a\"\n"
                                 "hvector=1,14,13,14,1 status=NG prov=citation:\"b\"\n"),
                    StatusConflict);
}

TEST_CASE("provenance text round trip") {
    for (const Provenance& p :
         {Provenance::citation("socle \"quoted\" degree"),
          Provenance::trivial_extension_of(hv("1,3,6,10,14")),
          Provenance::closure_from(hv("1,13,12,13,1"), "F2"),
          Provenance::certificate("prop-1-12-11-12-1")}) {
        CHECK(Provenance::parse(p.to_string()) == p);
    }
}
