#pragma once

#include <cstdint>

#include "pcc/common.hpp"
#include "pcc/graph.hpp"
#include "pcc/structures.hpp"

namespace pcc {

/// Complete w-ary tree of depth d plus a path through the children of every
/// inner vertex; vertices numbered level by level, left to right.
Graph tree_of_fans(int w, int d, long long size_cap = kDefaultSizeCap);

/// Vertex count sum_{j=0..d} w^j without building the graph (saturating).
unsigned long long tree_of_fans_size(int w, int d);

struct GkGraph {
    Graph graph;
    std::vector<int> boundary;  // deepest-level vertices, ascending
    int root = 0;
};

/// Recursive family over trees of fans: level k = 2 is the tree of fans
/// itself; each next level makes the root universal and re-glues copies along
/// the boundary d times.
GkGraph g_k_graph(int k, int w, int d, long long size_cap = kDefaultSizeCap);
unsigned long long g_k_graph_size(int k, int w, int d);

/// Recursive treewidth-t lower-bound family: a host copy with parameters
/// (p-1, t, X, N) where X = (x-1) N^binom(p+t-1, t-1) + 1, plus X pendant
/// copies of the (p, t-1, x, N) graph fully joined to every host vertex.
/// Sizes are computed symbolically first; requests above the cap are refused.
Graph lower_bound_graph(int p, int t, long long x, long long n_colors,
                        long long size_cap = kDefaultSizeCap);
unsigned long long lower_bound_graph_size(int p, int t, unsigned long long x,
                                          unsigned long long n_colors);

struct GeneratedDecomposedGraph {
    Graph graph;
    SimpleTreeDecomposition decomposition;
};

/// Random triangulation of a convex polygon (a maximal outerplanar graph)
/// with its triangle decomposition.
GeneratedDecomposedGraph random_maximal_outerplanar(int n, std::uint64_t seed);

/// Random stacked triangulation: repeatedly stack a new vertex into a
/// uniformly random face of the current triangulation.
GeneratedDecomposedGraph random_stacked_triangulation(int n, std::uint64_t seed);

/// Random simple k-tree: k-tree growth where every k-clique is extended at
/// most once beyond the bag that created it.
GeneratedDecomposedGraph random_simple_ktree(int k, int n, std::uint64_t seed);

/// Random graph with m edges and maximum degree at most delta, built by
/// rejected edge proposals. Throws resource_error when the proposal budget
/// runs out.
Graph random_bounded_degree(int n, int delta, long long m, std::uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
Graph complete_graph(int n);

struct ProductInstance {
    Graph graph;
    Layering layering;
    VertexPartition partition;
};

/// Fabricates a certified product-structure instance over the host graph h:
/// every class x gets at most `blowup` copies per layer, edges are added only
/// between copies of h-adjacent (or equal) classes in layers differing by at
/// most one, and each host edge is realized somewhere when possible. The
/// result always passes the layered-width-3 validator and its quotient is a
/// subgraph of h on the same vertex set.
ProductInstance synth_product_instance(const Graph& h, int layers, int blowup,
                                       std::uint64_t seed);

}  // namespace pcc
