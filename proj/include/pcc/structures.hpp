#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

/// Ordered vertex partition where every edge stays within one part or joins
/// consecutive parts.
struct Layering {
    std::vector<int> layer_of;
    int layer_count = 0;
};

/// BFS distances from one root per connected component; default root is the
/// smallest vertex index of the component.
Layering bfs_layering(const Graph& g);
Layering bfs_layering(const Graph& g, std::span<const int> roots);

/// True iff |layer(v) - layer(w)| <= 1 for every edge and all layers are in
/// range.
bool validate_layering(const Graph& g, const Layering& layering);

struct VertexPartition {
    std::vector<int> class_of;
    int class_count = 0;
};

/// Every vertex in exactly one class 0..class_count-1, all classes non-empty.
bool validate_partition(const Graph& g, const VertexPartition& part);

/// Graph on class identifiers; distinct classes adjacent iff some cross edge
/// exists. Never produces self-loops.
Graph quotient(const Graph& g, const VertexPartition& part);

/// True iff the layering is valid and every class meets every layer in at
/// most `ell` vertices.
bool validate_partition_layered_width(const Graph& g, const Layering& layering,
                                      const VertexPartition& part, int ell);

/// First (class, layer) pair exceeding `ell`, if any.
std::optional<std::pair<int, int>> find_layered_width_violation(const Graph& g,
                                                                const Layering& layering,
                                                                const VertexPartition& part,
                                                                int ell);

/// Tree of bags over a host graph. `width` must equal max bag size - 1.
/// Simplicity: every vertex set of size max(width, 1) is contained in at most
/// two bags.
struct SimpleTreeDecomposition {
    Graph tree;
    std::vector<std::vector<int>> bags;  // each sorted ascending
    int width = 0;
};

/// Checks edge coverage, per-vertex bag-subtree connectivity, the width field,
/// and (if requested) simplicity.
bool validate_decomposition(const Graph& g, const SimpleTreeDecomposition& dec,
                            bool require_simple);

}  // namespace pcc
