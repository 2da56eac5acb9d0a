#pragma once

#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination order (only when chordal): for each vertex, its
    /// neighbors that appear later in the order form a clique.
    std::vector<int> elimination_order;
};

/// Maximum-cardinality search followed by the standard perfect-elimination
/// verification.
ChordalityResult is_chordal(const Graph& g);

}  // namespace pcc
