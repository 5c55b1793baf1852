#pragma once

// Serialization of reports and results. JSON output is canonical: object
// keys sorted, floating-point numbers printed with %.17g, so equal inputs
// give byte-identical text.

#include <string>
#include <vector>

#include "symell/asym.hpp"
#include "symell/bounds.hpp"
#include "symell/dispatch.hpp"
#include "symell/harness.hpp"

namespace symell {

/// Shortest decimal that parses back to `v`; integral values keep a ".0".
std::string format_double(double v);

std::string to_json(const Enclosure& e);
std::string to_json(const EvalReport& r);
std::string to_json(IneqId id, const std::vector<double>& args, const Bracket& b);
std::string to_json(const CampaignReport& r);
std::string to_json(const std::vector<CampaignReport>& rs);
std::string to_json(const SuiteReport& r);
std::string to_json(const std::vector<SharpeningResult>& rs);

/// One row per (case, ratio):
/// case,ratio,samples,violations,max_rel_width,slope,seed
std::string to_csv(const std::vector<CampaignReport>& rs);

/// Re-emits JSON text canonically. Throws std::invalid_argument on
/// malformed input.
std::string canonical_json(const std::string& text);

}  // namespace symell
