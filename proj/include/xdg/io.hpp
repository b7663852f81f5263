#pragma once

#include <iosfwd>
#include <string>

#include "xdg/graph.hpp"

namespace xdg {

struct Coloring;

// Native text format, version header "xdg". One edge per line, 0-based
// endpoints, loops as e u u. Labels are not serialized.
void write_xdg(std::ostream& out, const Graph& g);
Graph read_xdg(std::istream& in);

// DIMACS .col: "p edge n m" then 1-based "e u v" lines. Comments pass
// through on read. Loops are rejected, the format has no place for them.
void write_dimacs(std::ostream& out, const Graph& g);
Graph read_dimacs(std::istream& in);

// Colorings travel either as JSON ({"order","count","colors":[...]}) or as
// per-vertex "s <v> <color>" lines with 1-based vertices.
void write_coloring_json(std::ostream& out, const Coloring& c);
Coloring read_coloring_json(std::istream& in);
void write_coloring_slines(std::ostream& out, const Coloring& c);
Coloring read_coloring_slines(std::istream& in);

// Convenience wrappers keyed on extension-ish format names used by the CLI.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& format);

}  // namespace xdg
