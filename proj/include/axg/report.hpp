#pragma once

#include "axg/graph.hpp"
#include "axg/independence.hpp"
#include "axg/recognizers.hpp"
#include "axg/structure.hpp"

#include <json.hpp>

namespace axg {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

// All vertex references in reports are labels, never internal ids.
// Parsing back requires the graph's labels to be unique (all builders and
// readers in this library produce unique labels).

Json graph_json(const Graph& g);
Json classification_json(const Classification& c);
Json analysis_json(const Graph& g, const AnalysisReport& r);
Json certificate_json(const Graph& g, const Certificate& c);
Json verdict_json(const Graph& g, const Verdict& v);

Certificate certificate_from_json(const Graph& g, const Json& j);
Verdict verdict_from_json(const Graph& g, const Json& j);

std::vector<std::string> labels_of(const Graph& g, const VertexSet& vs);
VertexSet ids_of(const Graph& g, const std::vector<std::string>& labels);

} // namespace axg
