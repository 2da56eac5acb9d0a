#pragma once

#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"
#include "pcc/structures.hpp"

namespace pcc {

/// Lifts a p-centered coloring psi of the quotient G/P to G as the triple
/// (layer mod (p+1), psi(class), rank within class-and-layer). Requires a
/// valid layering and layered width of the partition at most 3; with
/// verify_quotient the coloring psi is checked p-centered first.
ColorAssignment compose_planar(const Graph& g, const Layering& layering,
                               const VertexPartition& part, const ColorAssignment& psi, int p,
                               bool verify_quotient = false);

/// Inputs to the genus composition. gplus contains g - Z as a subgraph under
/// the canonical correspondence: the j-th vertex of V(g) - Z in ascending
/// index order is gplus vertex j; gplus may have extra vertices beyond those.
struct GenusComposeInputs {
    std::vector<int> z_set;            // apex vertices of g
    Graph gplus;                       // supergraph of g - Z
    Layering w_layering;               // layering of gplus, agreeing with g's on V(g) - Z
    ColorAssignment gplus_coloring;    // p-centered on gplus; coordinate 0 must
                                       // equal the w-layer mod (p+1)
    int genus = 0;
};

/// Apex-set composition: apex vertices get (0, layer mod (p+1), rank within
/// layer), everything else reuses the gplus coloring tagged 1 with its layer
/// coordinate kept in place. Requires |V_i intersect Z| <= 2 genus for every
/// layer i.
ColorAssignment compose_genus(const Graph& g, const Layering& layering,
                              const GenusComposeInputs& in, int p);

}  // namespace pcc
