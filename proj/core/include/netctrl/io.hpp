#ifndef NETCTRL_IO_HPP
#define NETCTRL_IO_HPP

#include <netctrl/graph.hpp>

#include <string>
#include <vector>

namespace netctrl {

// Edge-list text: first significant line is "n m", followed by m lines
// "u v" with 1-based endpoints, whitespace-separated. Blank lines and
// lines starting with '#' are ignored anywhere in the file. Rejects
// self-loops, duplicate edges, out-of-range endpoints, and trailing
// content; error messages carry the offending 1-based line number.
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list: header line, then edges in ascending
// (u, v) order, one per line. parse(serialize(g)) == g.
std::string serialize_edge_list(const Graph& g);

// Drawing hints for export_dot. Vertices are 0-based like the rest of
// the API; rendered node names stay 1-based.
struct DotAnnotations {
    std::vector<int> leaders;              // drawn as squares
    std::vector<int> shaded;               // filled grey (certificate vertices)
    std::vector<std::string> valueLabels;  // per-vertex value, size n or empty
};

// Undirected DOT text, one node statement per vertex and one edge
// statement per edge, deterministic for identical inputs.
std::string export_dot(const Graph& g, const DotAnnotations& a = {});

} // namespace netctrl

#endif
