#pragma once

#include <iosfwd>
#include <string>

#include "mgcage/graph.hpp"

namespace mgcage {

/// Parses the mg text format:
///   mg <n>            header, required first
///   e <u> <v>         undirected edge
///   a <tail> <head>   arc
/// Blank lines and lines starting with '#' are skipped. Syntax errors carry
/// the 1-based line number in the message.
MixedGraph parse_mg(std::istream& in);
MixedGraph parse_mg(const std::string& text);
MixedGraph load_mg(const std::string& path);

/// Canonical form: header, then edges with u < v in lexicographic order, then
/// arcs in lexicographic order, one per line, newline-terminated.
std::string serialize_mg(const MixedGraph& g);
void save_mg(const MixedGraph& g, const std::string& path);

/// Graphviz digraph; edges are rendered as undirected (`dir=none`).
std::string export_dot(const MixedGraph& g);

}  // namespace mgcage
