// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orc {

/// One verdict line of a suite entry.
struct SuiteLine {
    std::string text;
    bool ok = false;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::vector<SuiteLine> lines;
};

/// Built-in reproduction suite. Each entry rebuilds a worked example or
/// theorem-level check from scratch and verifies every stated equality
/// exactly. The sampled entries honor seed and samples.
std::vector<std::string> suite_names();

/// Throws UnknownExampleName for names outside suite_names().
SuiteResult run_suite_entry(const std::string& name, std::uint64_t seed, int samples);

}  // namespace orc
