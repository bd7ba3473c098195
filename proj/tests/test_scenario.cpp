// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orc/scenario.hpp"

using namespace orc;

namespace {

Json artinian_scenario() {
    return Json::parse(R"({
        "base": {
            "kind": "quotient",
            "ambient": {"kind": "poly_ring", "base": {"kind": "prime_field", "p": 5},
                        "vars": ["a", "b"]},
            "defining": ["a^2", "b^2"],
            "integral": false
        },
        "vars": ["x"],
        "elements": {"f": "a*x + b", "g": "a*x - b"},
        "checks": [
            {"op": "gaussian", "f": "f", "g": "g",
             "expect": {"gaussian": false, "dm_exponent": 2, "weak_content": true}}
        ]
    })");
}

}  // namespace

TEST_CASE("domain descriptions round through JSON") {
    DomainPtr z6 = domain_from_json(Json::parse(
        R"({"kind":"product","factors":[{"kind":"prime_field","p":2},{"kind":"prime_field","p":3}]})"));
    CHECK(z6->kind() == DomainKind::Product);
    CHECK(z6->describe() == "F_2 x F_3");

    CHECK_THROWS_WITH_AS(domain_from_json(Json::parse(R"({"kind":"integers","typo":1})")),
                         doctest::Contains("unknown field"), Error);
    CHECK_THROWS_WITH_AS(domain_from_json(Json::parse(R"({"kind":"matrix_ring"})")),
                         doctest::Contains("unknown domain kind"), Error);
}

TEST_CASE("a scenario reproduces the Artinian pair") {
    RunReport r = run_scenario_json(artinian_scenario(), RunOptions{});
    CHECK(r.pass);
    CHECK(r.document.at("summary").at("ok") == 1);
    const Json& result = r.document.at("checks").at(0).at("result");
    CHECK(result.at("gaussian") == false);
    CHECK(result.at("c_fg") == "( 0 )");
}

TEST_CASE("expectation mismatches fail the run") {
    Json s = artinian_scenario();
    s["checks"][0]["expect"]["gaussian"] = true;
    RunReport r = run_scenario_json(s, RunOptions{});
    CHECK_FALSE(r.pass);
    CHECK(r.document.at("checks").at(0).at("status") == "mismatch");
}

TEST_CASE("errors are recorded per check and fail the run") {
    Json s = Json::parse(R"({
        "base": {"kind": "poly_ring", "base": {"kind": "rationals"}, "vars": ["a", "b"]},
        "vars": ["x"],
        "elements": {"f": "a*x + b", "g": "b*x + a"},
        "checks": [
            {"op": "dm-exponent", "f": "f", "g": "g", "bound": 1},
            {"op": "content", "f": "f"}
        ]
    })");
    RunReport r = run_scenario_json(s, RunOptions{});
    CHECK_FALSE(r.pass);
    const Json& checks = r.document.at("checks");
    CHECK(checks.at(0).at("status") == "error");
    CHECK(checks.at(0).at("error").at("code") == "DMBoundExceeded");
    // the failure does not abort the remaining checks
    CHECK(checks.at(1).at("status") == "ok");
    CHECK(r.document.at("summary").at("error") == 1);
}

TEST_CASE("empty check lists succeed") {
    Json s = Json::parse(R"({"description": "nothing to do", "checks": []})");
    RunReport r = run_scenario_json(s, RunOptions{});
    CHECK(r.pass);
    CHECK(r.document.at("summary").at("total") == 0);
}

TEST_CASE("unknown scenario fields are rejected") {
    Json s = artinian_scenario();
    s["surprise"] = 1;
    CHECK_THROWS_WITH_AS(run_scenario_json(s, RunOptions{}), doctest::Contains("unknown field"),
                         Error);
    Json s2 = artinian_scenario();
    s2["checks"][0]["unexpected"] = 1;
    CHECK_THROWS_WITH_AS(run_scenario_json(s2, RunOptions{}),
                         doctest::Contains("unknown field"), Error);
}

TEST_CASE("undeclared element references surface as per-check parse errors") {
    Json s = artinian_scenario();
    s["checks"][0]["f"] = "zz";
    RunReport r = run_scenario_json(s, RunOptions{});
    CHECK_FALSE(r.pass);
    CHECK(r.document.at("checks").at(0).at("status") == "error");
    CHECK(r.document.at("checks").at(0).at("error").at("code") == "ParseError");
}

TEST_CASE("reports are byte-identical for a fixed seed") {
    Json s = Json::parse(R"({
        "checks": [
            {"op": "suite", "name": "thm_valgroups", "expect": {"pass": true}},
            {"op": "suite", "name": "ex_end", "expect": {"pass": true}}
        ]
    })");
    RunOptions opt;
    opt.seed = 42;
    opt.samples = 50;
    RunReport a = run_scenario_json(s, opt);
    RunReport b = run_scenario_json(s, opt);
    CHECK(a.pass);
    CHECK(a.document.dump(2) == b.document.dump(2));
}

TEST_CASE("example-suite reports are byte-identical for a fixed seed") {
    RunOptions opt;
    opt.seed = 3;
    opt.samples = 40;
    RunReport a = run_examples({"thm_valgroups", "ex_end", "transport_laws"}, opt);
    RunReport b = run_examples({"thm_valgroups", "ex_end", "transport_laws"}, opt);
    CHECK(a.pass);
    CHECK(a.document.dump() == b.document.dump());
}

TEST_CASE("the bundled example suite runs by name") {
    RunOptions opt;
    opt.samples = 25;
    RunReport r = run_examples({"ex_Art", "ex_nthroot"}, opt);
    CHECK(r.pass);
    CHECK(r.document.at("examples").size() == 2);
    CHECK_THROWS_WITH_AS(run_examples({"nonexistent"}, opt),
                         doctest::Contains("UnknownExampleName"), Error);
}

TEST_CASE("content reports keep their stable field names") {
    RunReport r = run_scenario_json(artinian_scenario(), RunOptions{});
    const Json& rep = r.document.at("checks").at(0).at("result");
    for (const char* key : {"f", "g", "c_f", "c_g", "c_fg", "gaussian", "weak_content",
                            "dm_exponent", "unital_applicable", "unital_holds"})
        CHECK(rep.contains(key));
}

TEST_CASE("product-content and pure-content checks run from scenarios") {
    Json s = Json::parse(R"json({
        "base": {"kind": "product",
                 "factors": [{"kind": "prime_field", "p": 2}, {"kind": "prime_field", "p": 3}]},
        "vars": ["x"],
        "checks": [
            {"op": "product-content", "f": "4*x",
             "expect": {"components": ["( 0 )", "( 1 )"]}}
        ]
    })json");
    CHECK(run_scenario_json(s, RunOptions{}).pass);

    Json s2 = Json::parse(R"json({
        "base": {"kind": "poly_ring", "base": {"kind": "rationals"}, "vars": ["y"]},
        "vars": ["t"],
        "checks": [
            {"op": "pure-content", "num": "y*t + y^2", "den": "t + 1",
             "expect": {"content": "( y )"}}
        ]
    })json");
    CHECK(run_scenario_json(s2, RunOptions{}).pass);
}

TEST_CASE("valuation extensions parse from JSON") {
    Json j = Json::parse(R"({
        "base": {"group": {"kind": "lex", "rank": 2}, "residue": {"kind": "rationals"},
                 "label": "V"},
        "target": {"group": {"kind": "lex", "rank": 2}, "residue": {"kind": "rationals"},
                   "label": "W"},
        "phi": {"kind": "matrix", "entries": [[1, 0], [3, 1]]}
    })");
    ValuationExtension e = extension_from_json(j);
    CHECK(is_content_extension(e));
    CHECK(e.base->label == "V");

    Json bad = j;
    bad["phi"]["entries"] = Json::parse("[[1, 5], [0, 1]]");
    CHECK_THROWS_WITH_AS(extension_from_json(bad), doctest::Contains("lower-triangular"), Error);
}
