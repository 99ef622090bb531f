#pragma once

#include <string>

#include <json.hpp>

#include "tanglekit/certify.hpp"
#include "tanglekit/diagram.hpp"

namespace tanglekit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "tanglekit-report/1";
inline constexpr const char* kBatchSchema = "tanglekit-batch/1";

/// Full analysis report: predicates, state-circle counts, twist regions,
/// MOF report for tangles, certificates with hypotheses and witnesses.
Json report_diagram(const Diagram& d);

Json report_certificate(const Certificate& c);

/// Report for a named input; parse/validation failures yield an error entry.
Json report_file(const std::string& name, const std::string& text);

}  // namespace tanglekit
