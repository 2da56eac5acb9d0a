#pragma once

#include <map>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"
#include "pcc/structures.hpp"

namespace pcc {

/// Supergraph in which every bag induces a clique; the result is chordal
/// (asserted). The decomposition must be valid and simple.
Graph chordal_completion(const Graph& g, const SimpleTreeDecomposition& dec);

/// Palette bound realized by color_simple_treewidth for a width-k simple
/// decomposition: p+1 for k = 1, (p+1)^{k-2} (p ceil(log2(p+1)) + 2p + 1)
/// for k >= 2.
long long stw_palette_bound(int k, int p);

/// p-centered coloring for graphs given with a simple tree-decomposition of
/// width k:
///   k = 1  layers of the completion are independent sets; the layer index
///          mod (p+1) already works,
///   k = 2  the graph is outerplanar; delegates to color_outerplanar,
///   k = 3  pairs the layer index mod (p+1) with an outerplanar coloring of
///          each BFS layer of the chordal completion (one shared palette),
///   k = 4  as k = 3 when a width-<=3 simple decomposition of every layer
///          graph is supplied in `layer_decompositions` (keyed by layer;
///          layer-graph vertices are numbered by ascending original index);
///          refused otherwise, as are larger k.
ColorAssignment color_simple_treewidth(
    const Graph& g, const SimpleTreeDecomposition& dec, int p,
    const std::map<int, SimpleTreeDecomposition>* layer_decompositions = nullptr);

}  // namespace pcc
