#pragma once

#include "rch/dsl.hpp"
#include "rch/states.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rch {

// A fixture: a diagram file plus the invariant values it must reproduce.
struct Expectation {
    std::string invariant;   // operation name, e.g. "penrose", "bracket", "tfcp"
    nlohmann::json params;   // e.g. {"n": 3}
    nlohmann::json expected; // canonical JSON of the expected value
    std::string source;      // short note on where the value comes from
    bool expensive = false;  // skipped by `catalog check` unless asked for
};

struct NamedExample {
    std::string name;
    std::string file;  // under the fixtures directory
    std::vector<Expectation> expect;
};

const std::vector<NamedExample>& catalog_entries();
std::vector<std::string> catalog_list();
const NamedExample& catalog_get(const std::string& name);

// RCH_FIXTURES, then ./fixtures, then the source-tree default.
std::string fixtures_dir();
ParsedDiagram catalog_load(const NamedExample& ex);

struct CheckOutcome {
    int checked = 0, skipped = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

CheckOutcome catalog_check(const std::string& name, const Caps& caps, bool includeExpensive);

}  // namespace rch
