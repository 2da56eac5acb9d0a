#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"
#include "pcc/structures.hpp"

namespace pcc {

// Text formats, all sorted by vertex/bag index. Parsers throw input_error on
// malformed counts or tokens.
//
//   graph:         "n m" then m lines "u v" with 0 <= u < v < n
//   layering:      n lines "v layer"
//   partition:     n lines "v class"
//   decomposition: "b"; b lines "size v1 ... vk"; b-1 lines "bi bj"
//   coloring:      "n coords c1 ... ck"; n lines "v x1 ... xk"
//   vertex set:    one vertex per line
//   layout:        one vertex per line, circular order

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Layering read_layering(std::istream& in);
void write_layering(std::ostream& out, const Layering& lay);

VertexPartition read_partition(std::istream& in);
void write_partition(std::ostream& out, const VertexPartition& part);

SimpleTreeDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const SimpleTreeDecomposition& dec);

ColorAssignment read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const ColorAssignment& col);

std::vector<int> read_vertex_list(std::istream& in);
void write_vertex_list(std::ostream& out, const std::vector<int>& vs);

// File wrappers; throw input_error when the file cannot be opened.
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
Layering load_layering(const std::string& path);
void save_layering(const std::string& path, const Layering& lay);
VertexPartition load_partition(const std::string& path);
void save_partition(const std::string& path, const VertexPartition& part);
SimpleTreeDecomposition load_decomposition(const std::string& path);
void save_decomposition(const std::string& path, const SimpleTreeDecomposition& dec);
ColorAssignment load_coloring(const std::string& path);
void save_coloring(const std::string& path, const ColorAssignment& col);
std::vector<int> load_vertex_list(const std::string& path);
void save_vertex_list(const std::string& path, const std::vector<int>& vs);

}  // namespace pcc
