#ifndef CUBIC_REPORT_HPP
#define CUBIC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cubic/catalog.hpp"
#include "cubic/graph.hpp"

namespace cubic {

inline constexpr const char* kToolVersion = "cubicwb 0.1.0";
inline constexpr int kSchemaVersion = 1;

struct CheckOptions {
  long long cap_matchings = 10000000;
  int cap_oddsets = 16;
  long long cap_nodes = 10000000;
  long long cap_cycles = 1000000;
  bool timings = false;
};

// Exit status ladder: a later entry wins over an earlier one.
enum class RunStatus { ok = 0, witness_missing = 2, resource_cap = 3, input_error = 4 };

struct GraphReport {
  nlohmann::json body;
  RunStatus status = RunStatus::ok;
};

// The individual report sections. Every witness is re-verified by an
// independent checker pass before it is written out.
GraphReport invariants_report(const CatalogEntry& entry, const CheckOptions& opts);
GraphReport check_report(const CatalogEntry& entry, const std::string& kind,
                         const CheckOptions& opts);
GraphReport construct_report(const CatalogEntry& entry, const CheckOptions& opts);

// Everything above in one object; used by sweep.
GraphReport full_report(const CatalogEntry& entry, const CheckOptions& opts);

// Serialization helpers shared by reports and their re-verification.
nlohmann::json edge_list_json(const CubicGraph& g, const EdgeSet& edges);
EdgeSet edge_set_from_json(const CubicGraph& g, const nlohmann::json& arr);

// Re-checks every certificate inside a report body against the graph.
// Returns a list of human-readable failures; empty means verified.
std::vector<std::string> reverify_report(const CubicGraph& g, const nlohmann::json& body);

}  // namespace cubic

#endif
