#pragma once

#include <iosfwd>

#include "json.hpp"

#include "sfg/graph.hpp"

namespace sfg {

// Edge-list text format:
//
//   N E model n          model is fractal | nonfractal | none
//   u v kind             one line per edge, kind is I (iterative) or N (non-iterative)
//   #meta
//   id role created_at   one line per vertex
void write_edge_list(std::ostream& out, const Graph& g);

/// Parses the edge-list format. Throws FormatError with a line number on malformed input.
Graph read_edge_list(std::istream& in);

/// Graphviz rendering: iterative edges solid, non-iterative edges dashed.
void write_dot(std::ostream& out, const Graph& g);

nlohmann::json to_json(const Graph& g);

}  // namespace sfg
