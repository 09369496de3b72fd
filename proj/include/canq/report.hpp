#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "canq/slopes.hpp"

namespace canq {

// Verification passes, listed in the order they run. Slope geometry always
// runs first; everything else is opt-in.
enum class CheckId { geometry, fukaya, psi, contraction, torsion, braid };

inline constexpr const char* kReportSchema = "canq-report/1";

std::string check_name(CheckId c);
const std::vector<CheckId>& all_checks();

// Unusable input document: malformed JSON, wrong field types, or slope data
// failing validation. The message names the offending field or slope index.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    PlumbingSpec spec;
    std::vector<CheckId> checks;
};

// Normalizes a selection: deduplicates, sorts into run order, forces slope
// geometry in.
RunConfig config_for_checks(PlumbingSpec spec, std::vector<CheckId> checks);

// Reads a run configuration from a JSON document of the shape
//   {
//     "slopes": [{"k": 1, "l": 0, "sign": "+"}, ...],
//     "field": {"kind": "rational"} | {"kind": "prime", "p": 5},
//     "truncation": {"poly_degree": 6, "winding": 2},
//     "checks": ["geometry", "fukaya", "psi", "contraction", "torsion", "braid"]
//   }
// where "field", "truncation", and "checks" are optional (rationals, degree 6,
// winding 2, all checks). Throws SpecError on malformed input.
RunConfig parse_run_config(const std::string& json_text);

// Runs the selected checks and assembles the report document. The output is a
// pure function of the configuration: fixed key order, integer/string/bool
// values only, fixed sampling seeds.
nlohmann::ordered_json run_report(const RunConfig& config);

bool report_passed(const nlohmann::ordered_json& report);

// Pretty-printed document with trailing newline, suitable for writing to disk.
std::string render_report(const nlohmann::ordered_json& report);

}  // namespace canq
