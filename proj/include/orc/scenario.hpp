// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "orc/content.hpp"
#include "orc/spectra.hpp"
#include "orc/suite.hpp"

namespace orc {

using Json = nlohmann::json;

// JSON -> model builders (shared by scenarios and the CLI). Unknown fields
// are rejected so typos cannot silently change a scenario's meaning.
DomainPtr domain_from_json(const Json& j);
OrderedGroup group_from_json(const Json& j);
GroupHom hom_from_json(const Json& j, const OrderedGroup& dom, const OrderedGroup& cod);
ValSpecPtr val_spec_from_json(const Json& j);
ValuationExtension extension_from_json(const Json& j);

Json content_report_to_json(const ContentReport& r);
Json suite_result_to_json(const SuiteResult& r);

struct RunOptions {
    std::uint64_t seed = 0;
    int samples = 200;
    bool timing = false;
};

struct RunReport {
    Json document;
    bool pass = false;
};

/// Execute a scenario document: build the declared rings, parse the declared
/// elements, run every requested check in order, and match results against
/// the scenario's expectations. Deterministic for a fixed seed; timing is
/// attached only when requested so reports stay byte-identical.
RunReport run_scenario_json(const Json& scenario, const RunOptions& opt);
RunReport run_scenario_file(const std::string& path, const RunOptions& opt);

/// The built-in reproduction suite as a report; empty selection runs all.
RunReport run_examples(const std::vector<std::string>& selection, const RunOptions& opt);

std::string toolkit_version();

}  // namespace orc
