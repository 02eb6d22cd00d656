#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tmsv/matroid.hpp"

namespace tmsv {

using Json = nlohmann::ordered_json;

// Parse an explicit-bases document:
//   {"name": "...", "ground_set": ["1","2"], "bases": [["1"],["2"]]}
// Element order is file order. Throws ParseError on malformed documents and
// forwards matroid axiom errors.
Matroid parse_matroid(const std::string& text, std::string* name_out = nullptr);

// Resolve a --matroid argument: "catalog:NAME" or a path to a document file.
Matroid load_matroid(const std::string& arg, std::string* name_out = nullptr);

struct PipelineOptions {
  int max_p = -1;  // -1: up to the rank
  bool force_large = false;
};

// The checks of the verification pipeline, in report order.
std::vector<std::string> check_names();

// Per-verb reports. All JSON output is byte-stable: ordered keys, no timing.
Json info_report(const Matroid& m, const std::string& name);
Json fan_report(const Matroid& m, const std::string& name);
Json faces_report(const Matroid& m, const std::string& name);
Json cohomology_report(const Matroid& m, const std::string& name, int max_p);
Json spectral_report(const Matroid& m, const std::string& name, int max_p);
Json algebra_report(const Matroid& m, const std::string& name);

// Full verification report: every check name appears with status
// pass / fail / skipped (geometric checks are skipped when the ground set
// exceeds the size guard and force_large is off). *failed is set when any
// check fails. `only` restricts to a single check name (empty = all).
Json verification_report(const Matroid& m, const std::string& name,
                         const PipelineOptions& opt, const std::string& only,
                         bool* failed);

// DOT digraph of the admissible-pair poset: nodes "M(I,F)", edges the cover
// relations.
std::string export_stratification_dot(const Matroid& m);

// Geometric pipeline size guard.
bool size_guard_ok(const Matroid& m, bool force_large);

}  // namespace tmsv
