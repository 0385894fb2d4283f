#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zdg/config.hpp"
#include "zdg/verify.hpp"

using namespace zdg;

TEST_CASE("full verification passes on small fields") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = parse_field(std::to_string(q));
        Report rep = run_verification(f, "all");
        CAPTURE(q);
        for (const auto& c : rep.claims) {
            CAPTURE(c.id);
            CAPTURE(c.note);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("scoped verification") {
    auto f4 = parse_field("4");
    Report reg = run_verification(f4, "regularity");
    CHECK(reg.claims.size() == 2);
    CHECK(reg.all_pass());

    Report rel = run_verification(f4, "relations");
    CHECK(rel.all_pass());
    CHECK(rel.claims.size() >= 16);

    CHECK_THROWS_AS(run_verification(f4, "nonsense"), OutOfDomain);
}

TEST_CASE("reference-table notes surface the discrepancies without failing") {
    auto f4 = parse_field("4");
    Report rep = run_verification(f4, "spectra");
    CHECK(rep.all_pass());
    bool saw_h1_note = false, saw_h_agreement = false;
    for (const auto& c : rep.claims) {
        if (c.id == "spectra.H1.reference_table") {
            CHECK(c.note.find("disagrees") != std::string::npos);
            saw_h1_note = true;
        }
        if (c.id == "spectra.H.reference_table") {
            CHECK(c.note.find("agrees") != std::string::npos);
            saw_h_agreement = true;
        }
    }
    CHECK(saw_h1_note);
    CHECK(saw_h_agreement);
}

TEST_CASE("seeded oracle scope is deterministic and passes") {
    auto f3 = parse_field("3");
    Report a = run_verification(f3, "oracles", 256, 20250809);
    CHECK(a.all_pass());
    CHECK(a.claims.size() == 4);
    Report b = run_verification(f3, "oracles", 256, 20250809);
    CHECK(a.to_json().dump() == b.to_json().dump());
    // a different seed still passes but is a different run
    Report c = run_verification(f3, "oracles", 256, 7);
    CHECK(c.all_pass());
    CHECK(c.seed == 7);
}

TEST_CASE("bounds suite on GF(5)") {
    auto f5 = parse_field("5");
    Report rep = run_verification(f5, "bounds");
    CHECK(rep.all_pass());
    CHECK(rep.claims.size() == 11); // partition + ten items
}

TEST_CASE("report JSON shape and determinism") {
    auto f3 = parse_field("3");
    Report rep = run_verification(f3, "counting");
    rep.seed = 7;
    auto j = rep.to_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["field"] == "3");
    CHECK(j["pass"] == true);
    CHECK(j["claims"].size() == rep.claims.size());
    Report rep2 = run_verification(f3, "counting");
    rep2.seed = 7;
    CHECK(rep.to_json().dump(2) == rep2.to_json().dump(2));
}

TEST_CASE("run config canonical round trip") {
    RunConfig c;
    c.command = "spectrum";
    c.field = "2^2:7";
    c.graph = "H3";
    c.scope = "spectra";
    c.format = "dot";
    c.out = "/tmp/x.dot";
    c.json = true;
    c.seed = 99;
    c.exact_cap = 128;
    RunConfig d = RunConfig::from_canonical_string(c.canonical_string());
    CHECK(d.canonical_string() == c.canonical_string());
    CHECK(d.graph == "H3");
    CHECK(d.json == true);
    CHECK(d.seed == 99);
}
