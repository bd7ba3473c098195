// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: every subcommand assembles a one-check scenario
// document and runs it through the same engine as scenario files, so inline
// invocations and regression fixtures cannot drift apart.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "orc/scenario.hpp"

using orc::Json;

namespace {

/// Inline JSON or @path to a JSON file.
Json json_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        orc::require(in.good(), orc::errc::ParseError, "cannot open " + text.substr(1));
        return Json::parse(in);
    }
    return Json::parse(text);
}

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t seed = 0;
    int samples = 200;
    bool timing = false;
    std::string out;
};

void emit(const std::string& text, const GlobalOpts& g) {
    if (g.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(g.out);
    f << text << "\n";
}

void render_lines(std::ostream& os, const Json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_lines(os, v, indent + 2);
            } else {
                os << pad << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array())
                render_lines(os, v, indent + 2);
            else
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

std::string render_examples_text(const Json& report) {
    std::ostringstream os;
    for (const auto& e : report.at("examples")) {
        os << (e.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
           << e.at("name").get<std::string>() << "\n";
        for (const auto& l : e.at("lines"))
            os << "      " << (l.at("ok").get<bool>() ? "[ok]  " : "[FAIL]") << " "
               << l.at("text").get<std::string>() << "\n";
    }
    os << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << "  overall";
    return os.str();
}

int finish_report(const orc::RunReport& report, const GlobalOpts& g, bool examples_table) {
    if (g.format == "json") {
        emit(report.document.dump(2), g);
    } else if (examples_table) {
        emit(render_examples_text(report.document), g);
    } else {
        std::ostringstream os;
        render_lines(os, report.document, 0);
        emit(os.str(), g);
    }
    return report.pass ? 0 : 1;
}

/// Run one inline check through the scenario engine and report just that
/// check's entry. Malformed inline arguments count as usage errors.
int run_inline_check(Json scenario, const GlobalOpts& g) {
    orc::RunOptions opt{g.seed, g.samples, g.timing};
    orc::RunReport report = orc::run_scenario_json(scenario, opt);
    Json entry = report.document.at("checks").at(0);
    if (g.format == "json") {
        emit(entry.dump(2), g);
    } else {
        std::ostringstream os;
        render_lines(os, entry, 0);
        emit(os.str(), g);
    }
    if (report.pass) return 0;
    if (entry.contains("error")) {
        std::string code = entry.at("error").at("code").get<std::string>();
        if (code == orc::errc::ParseError || code == orc::errc::BadScenario) return 2;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ohm-Rush content toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "seed for sampled checks (default 0)");
    app.add_option("--samples", g.samples, "sample count for sampled checks (default 200)");
    app.add_flag("--timing", g.timing, "attach wall-clock timing to reports");
    app.add_option("--out", g.out, "write the report to a file instead of stdout");

    // shared polynomial-extension options
    std::string base_json, vars_csv, order = "grevlex";
    auto add_ring_opts = [&](CLI::App* cmd) {
        cmd->add_option("--base", base_json, "base-ring description (JSON or @file)")
            ->required();
        cmd->add_option("--vars", vars_csv, "extension variables, comma separated")->required();
        cmd->add_option("--order", order, "monomial order: grevlex, grlex, lex")
            ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
    };
    auto ring_scenario = [&]() {
        Json s;
        s["base"] = json_arg(base_json);
        Json vars = Json::array();
        std::size_t start = 0;
        for (std::size_t i = 0; i <= vars_csv.size(); ++i) {
            if (i == vars_csv.size() || vars_csv[i] == ',') {
                if (i > start) vars.push_back(vars_csv.substr(start, i - start));
                start = i + 1;
            }
        }
        s["vars"] = vars;
        s["order"] = order;
        return s;
    };

    std::string ext_json;
    auto add_ext_opt = [&](CLI::App* cmd) {
        cmd->add_option("--extension", ext_json,
                        "valuation extension description (JSON or @file)")
            ->required();
    };

    std::string f_text, g_text, series_text;
    int bound = 0;
    std::vector<std::string> ideal_gens;

    // content
    CLI::App* c_content = app.add_subcommand("content", "content ideal of a polynomial");
    add_ring_opts(c_content);
    c_content->add_option("f", f_text, "polynomial")->required();

    // gaussian
    CLI::App* c_gauss =
        app.add_subcommand("gaussian", "full content report for a pair (f, g)");
    add_ring_opts(c_gauss);
    c_gauss->add_option("f", f_text)->required();
    c_gauss->add_option("g", g_text)->required();
    c_gauss->add_option("--bound", bound, "Dedekind-Mertens search bound");

    // dm-exponent
    CLI::App* c_dm = app.add_subcommand("dm-exponent", "least Dedekind-Mertens exponent");
    add_ring_opts(c_dm);
    c_dm->add_option("f", f_text)->required();
    c_dm->add_option("g", g_text)->required();
    c_dm->add_option("--bound", bound, "search bound (default deg(g)+1)");

    // weak-content
    CLI::App* c_weak = app.add_subcommand("weak-content", "radical content comparison");
    add_ring_opts(c_weak);
    c_weak->add_option("f", f_text)->required();
    c_weak->add_option("g", g_text)->required();

    // unital
    CLI::App* c_unital = app.add_subcommand("unital", "unit-content cancellation check");
    add_ring_opts(c_unital);
    c_unital->add_option("f", f_text)->required();
    c_unital->add_option("g", g_text)->required();

    // content-mod
    CLI::App* c_mod = app.add_subcommand("content-mod", "content in a factor ring R/I");
    add_ring_opts(c_mod);
    c_mod->add_option("f", f_text)->required();
    c_mod->add_option("--ideal", ideal_gens, "generators of I in the base ring")->required();

    // localize
    CLI::App* c_loc = app.add_subcommand("localize", "content over a localization of Z");
    add_ring_opts(c_loc);
    c_loc->add_option("f", f_text)->required();
    std::string at_prime, invert;
    c_loc->add_option("--at-prime", at_prime, "localize at the complement of (p)");
    c_loc->add_option("--invert", invert, "invert the powers of w");

    // valuation-content
    CLI::App* c_vc =
        app.add_subcommand("valuation-content", "content cut of a series element");
    add_ext_opt(c_vc);
    c_vc->add_option("g", series_text, "series, e.g. \"x^2 + O(x^5)\"")->required();

    // value-group-check
    CLI::App* c_vg = app.add_subcommand("value-group-check",
                                        "content criterion for a valuation extension");
    add_ext_opt(c_vg);

    // spectra
    CLI::App* c_spec = app.add_subcommand("spectra", "spectral comparison reports");
    add_ext_opt(c_spec);
    int prime_index = -1;
    c_spec->add_option("--prime", prime_index, "prime index for height/dimension reports");

    // semilocal
    CLI::App* c_semi =
        app.add_subcommand("semilocal", "semilocal intersection of content extensions");
    std::string branches_json;
    std::vector<std::string> value_vector;
    c_semi->add_option("--branches", branches_json, "JSON array of extensions (or @file)")
        ->required();
    c_semi->add_option("--value", value_vector, "value-vector components, one per branch");

    // paper-examples
    CLI::App* c_ex =
        app.add_subcommand("paper-examples", "run the bundled reproduction suite");
    std::vector<std::string> selection;
    c_ex->add_option("names", selection, "subset of example names (default: all)");
    bool list_only = false;
    c_ex->add_flag("--list", list_only, "list example names and exit");

    // run
    CLI::App* c_run = app.add_subcommand("run", "execute a scenario file");
    std::string scenario_path;
    c_run->add_option("scenario", scenario_path, "scenario JSON file")->required();

    // let the global flags appear after the subcommand name as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    try {
        if (app.got_subcommand(c_content)) {
            Json s = ring_scenario();
            s["checks"] = Json::array({Json{{"op", "content"}, {"f", f_text}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_gauss)) {
            Json chk{{"op", "gaussian"}, {"f", f_text}, {"g", g_text}};
            if (bound > 0) chk["bound"] = bound;
            Json s = ring_scenario();
            s["checks"] = Json::array({chk});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_dm)) {
            Json chk{{"op", "dm-exponent"}, {"f", f_text}, {"g", g_text}};
            if (bound > 0) chk["bound"] = bound;
            Json s = ring_scenario();
            s["checks"] = Json::array({chk});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_weak)) {
            Json s = ring_scenario();
            s["checks"] = Json::array({Json{{"op", "weak-content"}, {"f", f_text},
                                            {"g", g_text}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_unital)) {
            Json s = ring_scenario();
            s["checks"] = Json::array({Json{{"op", "unital"}, {"f", f_text}, {"g", g_text}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_mod)) {
            Json s = ring_scenario();
            s["checks"] = Json::array(
                {Json{{"op", "content-mod"}, {"f", f_text}, {"ideal", ideal_gens}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_loc)) {
            Json at{{"kind", "units"}};
            if (!at_prime.empty()) at = Json{{"kind", "complement_of_prime"}, {"p", at_prime}};
            if (!invert.empty()) at = Json{{"kind", "powers_of"}, {"w", invert}};
            Json s = ring_scenario();
            s["checks"] = Json::array({Json{{"op", "localize"}, {"f", f_text}, {"at", at}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_vc)) {
            Json s;
            s["extension"] = json_arg(ext_json);
            s["checks"] =
                Json::array({Json{{"op", "valuation-content"}, {"g", series_text}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_vg)) {
            Json s;
            s["extension"] = json_arg(ext_json);
            s["checks"] = Json::array({Json{{"op", "value-group-check"}}});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_spec)) {
            Json chk{{"op", "spectra"}};
            if (prime_index >= 0) chk["prime"] = prime_index;
            Json s;
            s["extension"] = json_arg(ext_json);
            s["checks"] = Json::array({chk});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_semi)) {
            Json chk{{"op", "semilocal"}, {"branches", json_arg(branches_json)}};
            if (!value_vector.empty()) chk["g"] = value_vector;
            Json s;
            s["checks"] = Json::array({chk});
            return run_inline_check(s, g);
        }
        if (app.got_subcommand(c_ex)) {
            if (list_only) {
                Json names = orc::suite_names();
                emit(g.format == "json" ? names.dump(2) : [&] {
                    std::string t;
                    for (const auto& n : orc::suite_names()) t += n + "\n";
                    t.pop_back();
                    return t;
                }(), g);
                return 0;
            }
            orc::RunOptions opt{g.seed, g.samples, g.timing};
            return finish_report(orc::run_examples(selection, opt), g, true);
        }
        if (app.got_subcommand(c_run)) {
            orc::RunOptions opt{g.seed, g.samples, g.timing};
            return finish_report(orc::run_scenario_file(scenario_path, opt), g, false);
        }
    } catch (const orc::Error& e) {
        Json err{{"error", Json{{"code", e.code()}, {"message", e.message()}}}};
        std::cerr << err.dump(2) << "\n";
        std::string code = e.code();
        return (code == orc::errc::ParseError || code == orc::errc::BadScenario ||
                code == orc::errc::UnknownExampleName)
                   ? 2
                   : 1;
    } catch (const Json::exception& e) {
        Json err{{"error", Json{{"code", "ParseError"}, {"message", e.what()}}}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 2;
}
