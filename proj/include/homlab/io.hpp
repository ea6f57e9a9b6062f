#ifndef HOMLAB_IO_HPP
#define HOMLAB_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include "homlab/graph.hpp"
#include "homlab/structure.hpp"

namespace homlab {

using ParsedInput = std::variant<Graph, Digraph, Structure>;

// Text formats.  Graphs: "n <count>" then "e <u> <v>" lines; digraphs use
// "a <u> <v>".  Structures: "sig <name>/<arity> ...", "n <count>", then
// "t <name> <v1> ... <vk>" per tuple.  Blank lines and '#' comments ignored;
// ids are 0-based decimal.
ParsedInput parse_input_text(const std::string& text, const std::string& origin);

// Resolves an existing file, else a built-in name (K5, C7, P4, K3,3,
// petersen, T3, DP4, DC3), else raises parse_error.
ParsedInput parse_input(const std::string& path_or_name);

std::optional<ParsedInput> builtin_named(const std::string& name);

std::string to_text(const Graph& g);
std::string to_text(const Digraph& g);
std::string to_text(const Structure& s);
std::string to_text(const ParsedInput& in);
// Single-line form for report values.
std::string to_compact_text(const Structure& s);

void write_file(const std::string& path, const std::string& content);

// Structure view of any parsed input (graphs via the symmetric encoding).
Structure as_structure(const ParsedInput& in);
Graph require_graph(const ParsedInput& in, const std::string& what);
Digraph require_digraph(const ParsedInput& in, const std::string& what);

} // namespace homlab

#endif
