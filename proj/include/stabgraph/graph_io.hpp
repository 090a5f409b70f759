#ifndef STABGRAPH_GRAPH_IO_HPP
#define STABGRAPH_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "stabgraph/graph.hpp"

namespace stabgraph {

// Line format: '#' comments, one "n <count>" header first, then records
// "e <u> <v>" (undirected), "d <i> <j>" (directed), "l <u>" (loop).
// A file never mixes 'e' and 'd'. Ids are 1-based. Canonical form has sorted
// edge lines followed by sorted loop lines; directed loops render as 'l'.

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error(message + " at line " + std::to_string(line_number)),
          line(line_number) {}
    int line;
};

using ParsedGraph = std::variant<Graph, Digraph>;

ParsedGraph parse_graph_file(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const Digraph& d);

} // namespace stabgraph

#endif
