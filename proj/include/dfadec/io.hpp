#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dfadec/dfa.hpp"
#include "dfadec/pareto.hpp"
#include "dfadec/sample.hpp"

namespace dfadec {

/// Every document carries "version": "v1"; readers accept a missing
/// version field and reject any other value.
inline constexpr const char* kFormatVersion = "v1";

nlohmann::json sample_to_json(const LabeledSample& sample);
LabeledSample sample_from_json(const nlohmann::json& doc);

/// Abbadingo training format: header "count alphabet_size", then one
/// example per line as "label length sym sym ...", labels 1/0 for
/// positive/negative, symbols 0-based integers.
LabeledSample read_abbadingo(std::istream& in);

/// Auto-detects JSON (first non-space byte '{') vs. Abbadingo text.
LabeledSample read_sample_text(const std::string& text);
LabeledSample read_sample_file(const std::string& path);

nlohmann::json dfa_to_json(const Dfa& dfa);
Dfa dfa_from_json(const nlohmann::json& doc);

nlohmann::json decomposition_to_json(const Decomposition& decomp);
Decomposition decomposition_from_json(const nlohmann::json& doc);
Decomposition read_decomposition_file(const std::string& path);

nlohmann::json search_result_to_json(const SearchResult& result, std::uint32_t n);

/// Graphviz digraph with double circles on accepting states; parallel
/// edges to the same target are merged into one comma-separated label.
std::string to_dot(const Dfa& dfa, const std::string& name = "dfa");

}  // namespace dfadec
