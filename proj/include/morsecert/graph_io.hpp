#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"

namespace morsecert {

struct ParsedGraph {
  SimplicialGraph graph;
  std::vector<std::string> warnings;
};

/// Reads either the edge-list text format or the JSON format; the JSON
/// format is recognised by a leading '{'.
///
/// Edge-list text:
///
///     # comment
///     vertices a b c
///     edges a b, b c
///
/// The `vertices` line is optional; without it the vertex set is the set of
/// edge endpoints. With it, every endpoint must be declared. Duplicate edges
/// are merged with a warning. Throws ParseError.
ParsedGraph parse_graph_with_warnings(std::string_view text);
SimplicialGraph parse_graph(std::string_view text);

SimplicialGraph read_graph_file(std::string const& path,
                                std::vector<std::string>* warnings = nullptr);

nlohmann::json graph_to_json(SimplicialGraph const& g);
SimplicialGraph graph_from_json(nlohmann::json const& j);

/// Edge-list text that parses back to the same graph.
std::string graph_to_text(SimplicialGraph const& g);

std::string graph_to_dot(SimplicialGraph const& g, std::string const& name = "G");

/// JSON array of the labels of `s`, in canonical order.
nlohmann::json labels_json(SimplicialGraph const& g, VertexSet s);
VertexSet labels_from_json(SimplicialGraph const& g, nlohmann::json const& j);

}  // namespace morsecert
