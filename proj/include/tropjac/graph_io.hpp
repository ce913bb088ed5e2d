#pragma once

// Graph files: {"vertices":[...],"edges":[{"id","tail","head","length"}]}.

#include <string>

#include "json.hpp"
#include "tropjac/graph.hpp"

namespace tropjac {

/// Lengths are Scalar text ("3/2", "a", "2*a") or JSON integers; a missing
/// length means 1. Throws ParseError, ValidationError.
MetricGraph parse_graph_json(const std::string& text);
/// Throws ParseError when the file cannot be read.
MetricGraph load_graph(const std::string& path);

nlohmann::ordered_json graph_to_json(const MetricGraph& g);

}  // namespace tropjac
