#pragma once

#include <string>
#include <vector>

#include "hypnap/iteration.hpp"
#include "hypnap/napoleon.hpp"
#include "hypnap/triangle.hpp"

namespace hypnap::io {

/// Decimal with 17 significant digits; round-trips doubles exactly.
std::string format_double(double x);

// JSON emission is hand-rolled so the number format is bit-stable; parsing
// goes through nlohmann::json.
std::string class_to_json(const CongruenceClass& c);
std::string triangle_to_json(const Triangle& t);

CongruenceClass parse_class_json(const std::string& text);
Triangle parse_triangle_json(const std::string& text);

/// "d0,d1,d2" (CLI flag form).
CongruenceClass parse_class_csv(const std::string& text);

/// Trajectory CSV: header
/// k,d0,d1,d2,alpha,chi,r_d,mu,gap_max,ratio_mu,ratio_gap
/// one row per record, LF endings, empty field where a ratio is vacuous.
std::string trajectory_csv(const Trajectory& t);
std::string trajectory_json(const Trajectory& t, const ContractionReport& rep);

std::string contraction_summary(const ContractionReport& rep);

}  // namespace hypnap::io
