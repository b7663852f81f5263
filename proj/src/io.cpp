#include "xdg/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xdg/coloring.hpp"

namespace xdg {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw std::runtime_error("graph input: " + what);
}

}  // namespace

void write_xdg(std::ostream& out, const Graph& g) {
  out << "xdg n=" << g.order() << " loops=" << (g.loops_allowed() ? 1 : 0) << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

Graph read_xdg(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad_input("empty stream");
  int n = -1, loops = -1;
  {
    std::istringstream head(line);
    std::string tag, nfield, lfield;
    head >> tag >> nfield >> lfield;
    if (tag != "xdg" || nfield.rfind("n=", 0) != 0 || lfield.rfind("loops=", 0) != 0)
      bad_input("expected header 'xdg n=<order> loops=<0|1>', got '" + line + "'");
    n = std::stoi(nfield.substr(2));
    loops = std::stoi(lfield.substr(6));
  }
  if (n < 0 || (loops != 0 && loops != 1)) bad_input("bad header values");
  Graph g(n, loops == 1);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string kind;
    if (!(row >> kind)) continue;  // blank line
    if (kind == "c") continue;
    if (kind != "e") bad_input("unknown line kind '" + kind + "'");
    int u, v;
    if (!(row >> u >> v)) bad_input("malformed edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) bad_input("edge endpoint out of range");
    if (u == v && loops == 0) bad_input("loop in a loopless graph");
    g.add_edge(u, v);
  }
  return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
  if (g.has_any_loop()) throw std::invalid_argument("write_dimacs: loops not representable");
  out << "p edge " << g.order() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long long declared = 0, seen = 0;
  Graph g;
  bool seen_problem = false;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string kind;
    if (!(row >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      std::string fmt;
      if (!(row >> fmt >> n >> declared) || fmt != "edge" || n < 0 || declared < 0)
        bad_input("malformed problem line '" + line + "'");
      g = Graph(n, false);
      seen_problem = true;
      continue;
    }
    if (kind == "e") {
      if (!seen_problem) bad_input("edge before problem line");
      int u, v;
      if (!(row >> u >> v)) bad_input("malformed edge line '" + line + "'");
      if (u < 1 || v < 1 || u > n || v > n) bad_input("edge endpoint out of range");
      if (u == v) bad_input("loop in DIMACS input");
      g.add_edge(u - 1, v - 1);
      ++seen;
      continue;
    }
    bad_input("unknown line kind '" + kind + "'");
  }
  if (!seen_problem) bad_input("missing problem line");
  if (seen != declared)
    bad_input("edge count mismatch: declared " + std::to_string(declared) + ", read " +
              std::to_string(seen));
  return g;
}

void write_coloring_json(std::ostream& out, const Coloring& c) {
  nlohmann::ordered_json j;
  j["order"] = c.color.size();
  j["count"] = c.count;
  j["colors"] = c.color;
  out << j.dump(2) << "\n";
}

Coloring read_coloring_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("colors") || !j["colors"].is_array()) bad_input("coloring JSON needs a colors array");
  return make_coloring(j["colors"].get<std::vector<int>>());
}

void write_coloring_slines(std::ostream& out, const Coloring& c) {
  out << "c colors " << c.count << "\n";
  for (size_t v = 0; v < c.color.size(); ++v) out << "s " << v + 1 << " " << c.color[v] << "\n";
}

Coloring read_coloring_slines(std::istream& in) {
  std::string line;
  std::vector<std::pair<int, int>> entries;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string kind;
    if (!(row >> kind)) continue;
    if (kind == "c") continue;
    if (kind != "s") bad_input("unknown line kind '" + kind + "'");
    int v, col;
    if (!(row >> v >> col) || v < 1) bad_input("malformed solution line '" + line + "'");
    entries.emplace_back(v - 1, col);
    max_vertex = std::max(max_vertex, v);
  }
  std::vector<int> colors(max_vertex, 0);
  for (const auto& [v, col] : entries) colors[v] = col;
  return make_coloring(std::move(colors));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open '" + path + "'");
  std::string first;
  if (!std::getline(in, first)) bad_input("empty file '" + path + "'");
  in.seekg(0);
  if (first.rfind("xdg", 0) == 0) return read_xdg(in);
  return read_dimacs(in);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
  std::ofstream out(path);
  if (!out) bad_input("cannot open '" + path + "' for writing");
  if (format == "xdg")
    write_xdg(out, g);
  else if (format == "dimacs")
    write_dimacs(out, g);
  else
    throw std::invalid_argument("write_graph_file: unknown format '" + format + "'");
}

}  // namespace xdg
