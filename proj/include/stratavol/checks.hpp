#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stratavol/atable.hpp"

namespace stratavol::cli {

// One consistency suite. `checks` counts individual comparisons; a suite
// passes when every comparison holds. `detail` carries suite-specific data
// (calibration candidates, asymptotics columns) into the JSON report.
struct SuiteResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    std::vector<std::string> failures;
    nlohmann::ordered_json detail;
};

// One deviation between a displayed formula and the form in force here.
// `printed` is the displayed form, `implemented` the one this code computes,
// `evidence` the concrete computation that discriminates between them.
struct ErrataEntry {
    std::string id;
    std::string printed;
    std::string implemented;
    std::string evidence;
};

struct CheckReport {
    std::vector<SuiteResult> suites;
    std::vector<ErrataEntry> errata;
    nlohmann::ordered_json predictions;
    std::vector<std::string> notes;

    bool ok() const;
    nlohmann::ordered_json to_json() const;
    std::string text_summary() const; // one status line per suite
};

// Static content, independent of any computation.
const std::vector<ErrataEntry>& errata_ledger();

std::vector<std::string> suite_names();

// Runs the named suites (all when `only` is empty) at the config caps.
// Unknown suite names raise DomainError.
CheckReport run_checks(const Config& config, const std::vector<std::string>& only = {});

} // namespace stratavol::cli
