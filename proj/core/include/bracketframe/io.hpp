// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bracketframe/report.hpp"
#include "bracketframe/signal.hpp"

namespace bracketframe {

/// {"L": int, "offset": int, "re": [...], "im": [...]}
nlohmann::json to_json(const SampledSignal& f);
/// Signal JSON plus {"period_steps": int}; "offset" is always 0.
nlohmann::json to_json(const PeriodicSignal& h);
nlohmann::json to_json(const FrameReport& report);
nlohmann::json to_json(const CompletenessVerdict& verdict);

/// Reads Signal JSON. The document carries only L; the lattice (p, q)
/// comes from the caller. Throws MalformedInput.
SampledSignal signal_from_json(const nlohmann::json& doc, std::int64_t p,
                               std::int64_t q);
PeriodicSignal periodic_from_json(const nlohmann::json& doc, std::int64_t p,
                                  std::int64_t q);

/// Accepts a single Signal object, an array of them, or {"signals": [...]}.
std::vector<SampledSignal> signals_from_json(const nlohmann::json& doc,
                                             std::int64_t p, std::int64_t q);

/// Parses a file; throws MalformedInput naming the path on failure.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

/// One period as CSV with header "t,re,im".
void write_csv(std::ostream& out, const PeriodicSignal& h);

}  // namespace bracketframe
