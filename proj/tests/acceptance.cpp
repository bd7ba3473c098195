// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one line per criterion, every equality exact, every
// runtime budget enforced. Exit status 0 only when every criterion holds.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "orc/suite.hpp"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> entries;  // suite entries that must all pass
    long budget_ms;
};

}  // namespace

int main() {
    const std::uint64_t seed = 0;
    const int samples = 200;

    const std::vector<Criterion> criteria = {
        {1, "Artinian pair: contents (a,b); c(fg)=0; (a,b)^2=(ab)!=0; not gaussian; "
            "exponent 2; weak content",
         {"ex_Art"}, 1000},
        {2, "p=3 tower: (xa+yb-1)^3 in mS, xa+yb-1 outside; witness confirmed",
         {"ex_aclosed"}, 5000},
        {3, "index-n roots (n=2,3): not content; x^(1/n) certifies mS not prime",
         {"ex_nthroot"}, 1000},
        {4, "identity value groups: content extension; content = value cut on 200 samples; "
            "unital sampling",
         {"thm_valgroups"}, 5000},
        {5, "ranks 1-6: heights preserved, Spec maps are poset isomorphisms, dimension "
            "formula and bound",
         {"thm_height", "thm_homeo"}, 1000},
        {6, "two lex-Z^2 branches: 5 primes, maximal ideals extend, contents on 200 samples",
         {"ex_end"}, 1000},
        {7, "500 integer pairs all gaussian; (ax+b, bx+a) over Q[a,b]: not gaussian, weak, "
            "exponent 2",
         {"gauss_prufer"}, 10000},
        {8, "transport laws: factor rings over Z and F_5[a,b], localizations at 2,3,5,7, "
            "product ring vs CRT, 200 samples each",
         {"transport_laws"}, 5000},
        {9, "module property suites at 200 samples, seed 0",
         {"property_suites"}, 30000},
    };

    bool all_pass = true;
    long total_ms = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string first_failure;
        for (const auto& name : c.entries) {
            orc::SuiteResult r = orc::run_suite_entry(name, seed, samples);
            if (!r.pass) {
                pass = false;
                for (const auto& l : r.lines)
                    if (!l.ok && first_failure.empty()) first_failure = name + ": " + l.text;
            }
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        total_ms += ms;
        bool in_budget = ms < c.budget_ms;
        bool ok = pass && in_budget;
        all_pass = all_pass && ok;
        std::printf("criterion %d: %s  (%ld ms, budget %ld ms)  %s\n", c.id,
                    ok ? "PASS" : "FAIL", ms, c.budget_ms, c.title.c_str());
        if (!pass) std::printf("  first failing line: %s\n", first_failure.c_str());
        if (pass && !in_budget) std::printf("  over budget\n");
    }
    std::printf("acceptance: %s (%ld ms total)\n", all_pass ? "PASS" : "FAIL", total_ms);
    return all_pass ? 0 : 1;
}
