#pragma once

#include <string>
#include <string_view>

#include "semideg/graph.hpp"

namespace semideg {

enum class GraphFormat { kJson, kDot };

// JSON: {"n":<int>,"arcs":[[u,v],...]} with arcs in lexicographic order and
// no insignificant whitespace.
// DOT: `digraph G {` then one `  v<i>;` line per vertex, one
// `  v<u> -> v<v>;` line per arc (lexicographic), then `}`.
std::string serialize(const OrientedGraph& g, GraphFormat format = GraphFormat::kJson);

// Parses either format (DOT is recognised by a leading `digraph`). Syntax
// errors throw Error{kParseError} with line and column; structural errors
// throw the same codes as OrientedGraph::from_arcs.
OrientedGraph parse_graph(std::string_view text);

OrientedGraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace semideg
