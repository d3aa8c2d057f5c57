#pragma once

#include <string>

#include "arrlog/analysis.hpp"

namespace arrlog {

// All JSON output uses rational strings ("3/7"), never floats, and ordered
// keys so reruns are byte-identical.

std::string arrangement_json(const Arrangement& a);
std::string derivation_space_json(const Arrangement& a, const DerivationSpace& space);
std::string classification_json(const Classification& c);
std::string membership_json(const Arrangement& normalized, const MembershipReport& r);
std::string cubic_json(const CubicReport& r, const std::vector<std::string>& names);
std::string decomposition_json(const Decomposition& d);
std::string analysis_json(const AnalysisReport& r, const Arrangement& a);

/// One JSONL catalog line for the search harness.
std::string search_record_json(size_t index, const Arrangement& a, const AnalysisReport& r,
                               bool with_timing);

}  // namespace arrlog
