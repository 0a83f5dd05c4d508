#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uspan/graph.hpp"
#include "uspan/hierarchy.hpp"
#include "uspan/metric.hpp"
#include "uspan/simulator.hpp"
#include "uspan/wspd.hpp"

namespace uspan {

nlohmann::json graph_to_json(const SpannerGraph& g);

/// Inverse of graph_to_json; validates ids and shape, keeps file order by seq.
SpannerGraph graph_from_json(const nlohmann::json& j);

nlohmann::json wspd_to_json(const Wspd& w);
nlohmann::json hierarchy_to_json(const DiscreteCenterHierarchy& h);
nlohmann::json event_to_json(const SimEvent& e);

std::string graph_to_dot(const SpannerGraph& g);

/// 2-d euclidean inputs only.
std::string graph_to_svg(const Metric& m, const SpannerGraph& g);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);
void write_jsonl_file(const std::string& path, const std::vector<SimEvent>& events);

}  // namespace uspan
