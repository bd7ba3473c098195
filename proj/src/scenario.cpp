// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/scenario.hpp"

#include <chrono>
#include <fstream>

#include "orc/parse.hpp"

namespace orc {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    require(j.is_object(), errc::BadScenario, where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        require(ok, errc::BadScenario, "unknown field \"" + key + "\" in " + where);
    }
}

BigInt bigint_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    fail(errc::BadScenario, where + " must be an integer");
}

MonomialOrder order_from_json(const Json& j) {
    std::string s = j.get<std::string>();
    if (s == "grevlex") return MonomialOrder{OrderKind::GrevLex};
    if (s == "grlex") return MonomialOrder{OrderKind::GrLex};
    if (s == "lex") return MonomialOrder{OrderKind::Lex};
    fail(errc::BadScenario, "unknown monomial order \"" + s + "\"");
}

}  // namespace

DomainPtr domain_from_json(const Json& j) {
    require(j.is_object() && j.contains("kind"), errc::BadScenario,
            "domain description needs a \"kind\" tag");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") {
        check_keys(j, {"kind"}, "integers domain");
        return Domain::integers();
    }
    if (kind == "rationals") {
        check_keys(j, {"kind"}, "rationals domain");
        return Domain::rationals();
    }
    if (kind == "prime_field") {
        check_keys(j, {"kind", "p"}, "prime_field domain");
        return Domain::prime_field(bigint_from_json(j.at("p"), "p"));
    }
    if (kind == "poly_ring") {
        check_keys(j, {"kind", "base", "vars", "order"}, "poly_ring domain");
        MonomialOrder order{};
        if (j.contains("order")) order = order_from_json(j.at("order"));
        return Domain::poly_ring(domain_from_json(j.at("base")),
                                 j.at("vars").get<std::vector<std::string>>(), order);
    }
    if (kind == "quotient") {
        check_keys(j, {"kind", "ambient", "defining", "integral"}, "quotient domain");
        DomainPtr amb = domain_from_json(j.at("ambient"));
        std::vector<Value> gens;
        for (const auto& s : j.at("defining"))
            gens.push_back(parse_value(s.get<std::string>(), amb));
        bool integral = j.value("integral", false);
        return Domain::quotient(amb, Ideal(amb, std::move(gens)), integral);
    }
    if (kind == "fraction_field") {
        check_keys(j, {"kind", "base"}, "fraction_field domain");
        return Domain::fraction_field(domain_from_json(j.at("base")));
    }
    if (kind == "product") {
        check_keys(j, {"kind", "factors"}, "product domain");
        std::vector<DomainPtr> factors;
        for (const auto& f : j.at("factors")) factors.push_back(domain_from_json(f));
        return Domain::product(std::move(factors));
    }
    fail(errc::BadScenario, "unknown domain kind \"" + kind + "\"");
}

OrderedGroup group_from_json(const Json& j) {
    require(j.is_object() && j.contains("kind"), errc::BadScenario,
            "group description needs a \"kind\" tag");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lex") {
        check_keys(j, {"kind", "rank"}, "lex group");
        return OrderedGroup::lex(j.at("rank").get<int>());
    }
    if (kind == "rational") {
        check_keys(j, {"kind", "denominator"}, "rational group");
        return OrderedGroup::rational(bigint_from_json(j.at("denominator"), "denominator"));
    }
    fail(errc::BadScenario, "unknown group kind \"" + kind + "\"");
}

GroupHom hom_from_json(const Json& j, const OrderedGroup& dom, const OrderedGroup& cod) {
    require(j.is_object() && j.contains("kind"), errc::BadScenario,
            "hom description needs a \"kind\" tag");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix") {
        check_keys(j, {"kind", "entries"}, "matrix hom");
        std::vector<std::vector<BigInt>> m;
        for (const auto& row : j.at("entries")) {
            std::vector<BigInt> r;
            for (const auto& x : row) r.push_back(bigint_from_json(x, "matrix entry"));
            m.push_back(std::move(r));
        }
        return GroupHom::lattice_map(dom, cod, std::move(m));
    }
    if (kind == "scale") {
        check_keys(j, {"kind", "num", "den"}, "scale hom");
        return GroupHom::scaling(dom, cod, bigint_from_json(j.at("num"), "num"),
                                 j.contains("den") ? bigint_from_json(j.at("den"), "den")
                                                   : BigInt(1));
    }
    if (kind == "identity") {
        check_keys(j, {"kind"}, "identity hom");
        require(dom.same(cod), errc::BadScenario, "identity hom needs equal groups");
        return GroupHom::identity(dom);
    }
    fail(errc::BadScenario, "unknown hom kind \"" + kind + "\"");
}

ValSpecPtr val_spec_from_json(const Json& j) {
    check_keys(j, {"group", "residue", "label"}, "valuation-ring spec");
    return make_val_spec(group_from_json(j.at("group")), domain_from_json(j.at("residue")),
                         j.value("label", std::string("V")));
}

ValuationExtension extension_from_json(const Json& j) {
    check_keys(j, {"base", "target", "phi"}, "valuation extension");
    ValSpecPtr base = val_spec_from_json(j.at("base"));
    ValSpecPtr target = val_spec_from_json(j.at("target"));
    GroupHom phi = hom_from_json(j.at("phi"), base->group, target->group);
    return make_extension(std::move(base), std::move(target), std::move(phi));
}

Json content_report_to_json(const ContentReport& r) {
    Json j;
    j["f"] = r.f.str();
    j["g"] = r.g.str();
    j["fg"] = r.fg.str();
    j["c_f"] = r.c_f.str();
    j["c_g"] = r.c_g.str();
    j["c_fg"] = r.c_fg.str();
    j["c_f_times_c_g"] = r.c_product.str();
    j["gaussian"] = r.gaussian;
    j["weak_content"] = r.weak_content ? Json(*r.weak_content) : Json();
    j["dm_exponent"] = r.dm_exponent ? Json(*r.dm_exponent) : Json();
    j["unital_applicable"] = r.unital_applicable;
    j["unital_holds"] = r.unital_holds ? Json(*r.unital_holds) : Json();
    return j;
}

Json suite_result_to_json(const SuiteResult& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back({{"ok", l.ok}, {"text", l.text}});
    return Json{{"name", r.name}, {"pass", r.pass}, {"lines", lines}};
}

std::string toolkit_version() { return "0.1.0"; }

// ---------------------------------------------------------------------------
// Scenario execution

namespace {

struct ScenarioContext {
    DomainPtr ring;  // base[vars] when declared
    std::optional<ValuationExtension> extension;
    std::map<std::string, Polynomial> elements;
    std::map<std::string, GenSeries> series;
    RunOptions opt;

    const Polynomial& element(const std::string& name) const {
        auto it = elements.find(name);
        require(it != elements.end(), errc::BadScenario,
                "check references undeclared element \"" + name + "\"");
        return it->second;
    }
    const GenSeries& series_elem(const std::string& name) const {
        auto it = series.find(name);
        require(it != series.end(), errc::BadScenario,
                "check references undeclared series \"" + name + "\"");
        return it->second;
    }
    const DomainPtr& need_ring() const {
        require(ring != nullptr, errc::BadScenario,
                "check needs a polynomial extension (\"base\" and \"vars\")");
        return ring;
    }
    const ValuationExtension& need_extension() const {
        require(extension.has_value(), errc::BadScenario,
                "check needs a valuation extension (\"extension\")");
        return *extension;
    }
};

MultiplicativeSet mult_set_from_json(const Json& j, const DomainPtr& base) {
    require(j.is_object() && j.contains("kind"), errc::BadScenario,
            "multiplicative set needs a \"kind\" tag");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "units") {
        check_keys(j, {"kind"}, "units set");
        return MultiplicativeSet::units();
    }
    if (kind == "complement_of_prime") {
        check_keys(j, {"kind", "p"}, "complement_of_prime set");
        return MultiplicativeSet::complement_of_prime(
            parse_ideal(j.at("p").get<std::string>(), base));
    }
    if (kind == "powers_of") {
        check_keys(j, {"kind", "w"}, "powers_of set");
        return MultiplicativeSet::powers_of(parse_value(j.at("w").get<std::string>(), base));
    }
    fail(errc::BadScenario, "unknown multiplicative-set kind \"" + kind + "\"");
}

/// Allowed fields per check op; unknown ops and stray fields are rejected
/// before any check runs.
void validate_check(const Json& c) {
    require(c.is_object() && c.contains("op"), errc::BadScenario, "check needs an \"op\" tag");
    static const std::map<std::string, std::vector<const char*>> schema = {
        {"content", {"op", "f", "expect"}},
        {"gaussian", {"op", "f", "g", "bound", "expect"}},
        {"dm-exponent", {"op", "f", "g", "bound", "expect"}},
        {"weak-content", {"op", "f", "g", "expect"}},
        {"unital", {"op", "f", "g", "expect"}},
        {"content-mod", {"op", "f", "ideal", "expect"}},
        {"localize", {"op", "f", "at", "expect"}},
        {"product-content", {"op", "f", "expect"}},
        {"nonprime-witness", {"op", "p", "p_base", "u", "v", "expect"}},
        {"pure-content", {"op", "num", "den", "expect"}},
        {"series-value", {"op", "g", "expect"}},
        {"valuation-content", {"op", "g", "expect"}},
        {"value-group-check", {"op", "expect"}},
        {"spectra", {"op", "prime", "expect"}},
        {"semilocal", {"op", "branches", "g", "expect"}},
        {"suite", {"op", "name", "expect"}},
    };
    std::string op = c.at("op").get<std::string>();
    auto it = schema.find(op);
    require(it != schema.end(), errc::BadScenario, "unknown check op \"" + op + "\"");
    for (const auto& [key, value] : c.items()) {
        bool ok = false;
        for (const char* a : it->second)
            if (key == a) ok = true;
        require(ok, errc::BadScenario,
                "unknown field \"" + key + "\" in check op \"" + op + "\"");
    }
}

Json run_one_check(const Json& c, ScenarioContext& ctx) {
    std::string op = c.at("op").get<std::string>();
    auto poly_arg = [&](const char* key) -> Polynomial {
        const Json& v = c.at(key);
        std::string s = v.get<std::string>();
        if (ctx.elements.count(s)) return ctx.element(s);
        return parse_polynomial(s, ctx.need_ring());
    };
    auto series_arg = [&](const char* key) -> GenSeries {
        const Json& v = c.at(key);
        std::string s = v.get<std::string>();
        if (ctx.series.count(s)) return ctx.series_elem(s);
        return parse_series(s, ctx.need_extension().target);
    };

    if (op == "content") {
        check_keys(c, {"op", "f", "expect"}, "content check");
        return Json{{"content", content_ideal(poly_arg("f")).str()}};
    }
    if (op == "gaussian") {
        check_keys(c, {"op", "f", "g", "bound", "expect"}, "gaussian check");
        std::optional<int> bound;
        if (c.contains("bound")) bound = c.at("bound").get<int>();
        return content_report_to_json(analyze_pair(poly_arg("f"), poly_arg("g"), bound));
    }
    if (op == "dm-exponent") {
        check_keys(c, {"op", "f", "g", "bound", "expect"}, "dm-exponent check");
        Polynomial g = poly_arg("g");
        int bound = c.contains("bound") ? c.at("bound").get<int>() : default_dm_bound(g);
        return Json{{"dm_exponent", dm_exponent(poly_arg("f"), g, bound)}};
    }
    if (op == "weak-content") {
        check_keys(c, {"op", "f", "g", "expect"}, "weak-content check");
        return Json{{"weak_content", is_weak_content_pair(poly_arg("f"), poly_arg("g"))}};
    }
    if (op == "unital") {
        check_keys(c, {"op", "f", "g", "expect"}, "unital check");
        std::optional<bool> u = unital_check(poly_arg("f"), poly_arg("g"));
        return Json{{"unital_applicable", u.has_value()},
                    {"unital_holds", u ? Json(*u) : Json()}};
    }
    if (op == "content-mod") {
        check_keys(c, {"op", "f", "ideal", "expect"}, "content-mod check");
        std::vector<Value> gens;
        DomainPtr base = ctx.need_ring()->coeff();
        for (const auto& s : c.at("ideal"))
            gens.push_back(parse_value(s.get<std::string>(), base));
        ContentModResult r = content_mod_ideal(poly_arg("f"), Ideal(base, std::move(gens)));
        return Json{{"reduced_content", r.reduced_content.str()},
                    {"modulus", r.modulus.str()},
                    {"agree", r.agree},
                    {"display", r.str()}};
    }
    if (op == "localize") {
        check_keys(c, {"op", "f", "at", "expect"}, "localize check");
        LocalizedContent r =
            content_localize(poly_arg("f"), mult_set_from_json(c.at("at"),
                                                               ctx.need_ring()->coeff()));
        return Json{{"ideal", r.ideal.str()}, {"ring", r.ring_label}, {"display", r.str()}};
    }
    if (op == "product-content") {
        check_keys(c, {"op", "f", "expect"}, "product-content check");
        Json comps = Json::array();
        for (const auto& I : content_product_ring(poly_arg("f"))) comps.push_back(I.str());
        return Json{{"components", comps}};
    }
    if (op == "nonprime-witness") {
        check_keys(c, {"op", "p", "p_base", "u", "v", "expect"}, "nonprime-witness check");
        DomainPtr p_ring = ctx.need_ring();
        if (c.contains("p_base"))
            p_ring = Domain::poly_ring(domain_from_json(c.at("p_base")), p_ring->vars(),
                                       p_ring->order());
        std::vector<Value> gens;
        for (const auto& s : c.at("p")) gens.push_back(parse_value(s.get<std::string>(), p_ring));
        WitnessVerdict w =
            nonprime_extension_witness(Ideal(p_ring, std::move(gens)), poly_arg("u"),
                                       poly_arg("v"));
        return Json{{"confirmed", w.confirmed}, {"detail", w.detail}};
    }
    if (op == "pure-content") {
        check_keys(c, {"op", "num", "den", "expect"}, "pure-content check");
        Ideal r = pure_transcendental_content({poly_arg("num"), poly_arg("den")});
        return Json{{"content", r.str()}};
    }
    if (op == "series-value") {
        check_keys(c, {"op", "g", "expect"}, "series-value check");
        return Json{{"value", value_of(series_arg("g")).str()}};
    }
    if (op == "valuation-content") {
        check_keys(c, {"op", "g", "expect"}, "valuation-content check");
        GenSeries g = series_arg("g");
        ValueCutIdeal cut = content_of_series(g, ctx.need_extension());
        return Json{{"content_cut", cut.str()}, {"value", value_of(g).str()}};
    }
    if (op == "value-group-check") {
        check_keys(c, {"op", "expect"}, "value-group-check");
        const ValuationExtension& e = ctx.need_extension();
        Json j;
        j["order_iso"] = hom_is_order_iso(e.phi);
        j["content_extension"] = is_content_extension(e);
        if (!j["content_extension"].get<bool>()) {
            try {
                NthRootWitness w = noncontent_witness(e);
                j["witness"] = Json{{"g", w.g.str()},
                                    {"n", w.n},
                                    {"value_g", w.value_g.str()},
                                    {"value_g_pow_n", w.value_gn.str()},
                                    {"maximal_cut", w.m_cut.str()},
                                    {"confirmed", w.confirmed}};
            } catch (const Error& err) {
                j["witness"] = Json{{"error", Json{{"code", err.code()},
                                                   {"message", err.what()}}}};
            }
        } else {
            j["maximal_extends"] = maximal_extension_check(e);
        }
        return j;
    }
    if (op == "spectra") {
        check_keys(c, {"op", "prime", "expect"}, "spectra check");
        const ValuationExtension& e = ctx.need_extension();
        SpecMapReport sm = spec_map_check(e);
        Json j;
        j["is_bijective"] = sm.is_bijective;
        j["is_homeomorphism"] = sm.is_homeomorphism;
        j["extended_primes"] = sm.extended_primes;
        DimBoundReport db = dimension_bound(e);
        j["dimension_bound"] = Json{{"bound", db.bound}, {"dim_s", db.dim_s},
                                    {"holds", db.holds}};
        if (c.contains("prime")) {
            int i = c.at("prime").get<int>();
            HeightReport h = height_check(e, i);
            DimFormulaReport d = dim_formula_check(e, i);
            j["height"] = Json{{"ht_p", h.ht_p}, {"ht_ps", h.ht_ps}, {"equal", h.equal}};
            j["dim_formula"] = Json{{"lhs", d.lhs}, {"rhs", d.rhs}, {"equal", d.equal}};
        }
        return j;
    }
    if (op == "semilocal") {
        check_keys(c, {"op", "branches", "g", "expect"}, "semilocal check");
        std::vector<ValuationExtension> branches;
        for (const auto& b : c.at("branches")) branches.push_back(extension_from_json(b));
        SemilocalModel m = semilocal_build(std::move(branches));
        Json j;
        j["spec_r_primes"] = m.spec_r_size();
        j["spec_s_primes"] = m.spec_s_size();
        j["independence_assumed"] = m.independence_assumed;
        if (c.contains("g")) {
            std::vector<GroupElem> g;
            for (std::size_t i = 0; i < m.branches.size(); ++i)
                g.push_back(parse_group_elem(c.at("g").at(i).get<std::string>(),
                                             m.branches[i].target->group));
            Json cuts = Json::array();
            for (const auto& cut : semilocal_content_vector(g, m)) cuts.push_back(cut.str());
            j["content_cuts"] = cuts;
        }
        return j;
    }
    if (op == "suite") {
        check_keys(c, {"op", "name", "expect"}, "suite check");
        return suite_result_to_json(
            run_suite_entry(c.at("name").get<std::string>(), ctx.opt.seed, ctx.opt.samples));
    }
    fail(errc::BadScenario, "unknown check op \"" + op + "\"");
}

/// Every key in `expect` must appear in `got` with an equal value
/// (recursively for nested objects).
bool expect_matches(const Json& expect, const Json& got) {
    if (!expect.is_object()) return expect == got;
    if (!got.is_object()) return false;
    for (const auto& [k, v] : expect.items()) {
        if (!got.contains(k)) return false;
        if (!expect_matches(v, got.at(k))) return false;
    }
    return true;
}

}  // namespace

RunReport run_scenario_json(const Json& scenario, const RunOptions& opt) {
    check_keys(scenario,
               {"description", "base", "vars", "order", "extension", "elements", "series",
                "checks"},
               "scenario");
    ScenarioContext ctx;
    ctx.opt = opt;
    if (scenario.contains("base")) {
        require(scenario.contains("vars"), errc::BadScenario,
                "\"base\" needs \"vars\" for the polynomial extension");
        MonomialOrder order{};
        if (scenario.contains("order")) order = order_from_json(scenario.at("order"));
        ctx.ring = Domain::poly_ring(domain_from_json(scenario.at("base")),
                                     scenario.at("vars").get<std::vector<std::string>>(), order);
    }
    if (scenario.contains("extension"))
        ctx.extension = extension_from_json(scenario.at("extension"));
    if (scenario.contains("elements")) {
        for (const auto& [name, text] : scenario.at("elements").items())
            ctx.elements.emplace(name,
                                 parse_polynomial(text.get<std::string>(), ctx.need_ring()));
    }
    if (scenario.contains("series")) {
        for (const auto& [name, text] : scenario.at("series").items())
            ctx.series.emplace(name, parse_series(text.get<std::string>(),
                                                  ctx.need_extension().target));
    }

    // reject malformed checks before executing anything
    if (scenario.contains("checks"))
        for (const auto& c : scenario.at("checks")) validate_check(c);

    auto t0 = std::chrono::steady_clock::now();
    Json checks = Json::array();
    int ok = 0, mismatch = 0, errors = 0;
    if (scenario.contains("checks")) {
        for (const auto& c : scenario.at("checks")) {
            Json entry;
            entry["op"] = c.value("op", "?");
            try {
                Json result = run_one_check(c, ctx);
                entry["result"] = result;
                if (c.contains("expect")) {
                    entry["expect"] = c.at("expect");
                    if (expect_matches(c.at("expect"), result)) {
                        entry["status"] = "ok";
                        ++ok;
                    } else {
                        entry["status"] = "mismatch";
                        ++mismatch;
                    }
                } else {
                    entry["status"] = "ok";
                    ++ok;
                }
            } catch (const Error& e) {
                entry["status"] = "error";
                entry["error"] = Json{{"code", e.code()}, {"message", e.message()}};
                ++errors;
            }
            checks.push_back(std::move(entry));
        }
    }

    RunReport report;
    report.document["version"] = toolkit_version();
    report.document["seed"] = opt.seed;
    report.document["samples"] = opt.samples;
    if (scenario.contains("description"))
        report.document["description"] = scenario.at("description");
    report.document["checks"] = checks;
    report.document["summary"] = Json{{"total", ok + mismatch + errors},
                                      {"ok", ok},
                                      {"mismatch", mismatch},
                                      {"error", errors}};
    report.pass = mismatch == 0 && errors == 0;
    report.document["pass"] = report.pass;
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report.document["timing_ms"] = ms;
    }
    return report;
}

RunReport run_scenario_file(const std::string& path, const RunOptions& opt) {
    std::ifstream in(path);
    require(in.good(), errc::ParseError, "cannot open scenario file " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(errc::ParseError, "scenario " + path + ": " + e.what());
    }
    RunReport r = run_scenario_json(j, opt);
    r.document["scenario"] = path;
    return r;
}

RunReport run_examples(const std::vector<std::string>& selection, const RunOptions& opt) {
    std::vector<std::string> names = selection.empty() ? suite_names() : selection;
    auto t0 = std::chrono::steady_clock::now();
    Json entries = Json::array();
    bool pass = true;
    for (const auto& n : names) {
        SuiteResult r = run_suite_entry(n, opt.seed, opt.samples);
        pass = pass && r.pass;
        entries.push_back(suite_result_to_json(r));
    }
    RunReport report;
    report.document["version"] = toolkit_version();
    report.document["seed"] = opt.seed;
    report.document["samples"] = opt.samples;
    report.document["examples"] = entries;
    report.pass = pass;
    report.document["pass"] = pass;
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report.document["timing_ms"] = ms;
    }
    return report;
}

}  // namespace orc
