#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pcc/common.hpp"

namespace pcc {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    /// Throws input_error on out-of-range endpoints, self-loops or duplicate
    /// edges in the list.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    /// Inserts the edge, keeping adjacency sorted; duplicates are ignored.
    void add_edge(int u, int v);

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// Maximal connected vertex sets, each sorted, list ordered by minimum element.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Components of the subgraph induced by `restrict_to` (need not be sorted).
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   std::span<const int> restrict_to);

/// Subgraph induced by `vertices` (sorted ascending, duplicate-free), with
/// vertex i of the result corresponding to vertices[i]. If `index_of` is
/// given it receives a vertex_count-sized map original -> new index (-1 when
/// absent).
Graph induced_subgraph(const Graph& g, std::span<const int> vertices,
                       std::vector<int>* index_of = nullptr);

}  // namespace pcc
