#pragma once

#include <optional>

#include "pcc/coloring.hpp"
#include "pcc/common.hpp"
#include "pcc/graph.hpp"

namespace pcc {

struct OracleOptions {
    int max_colors = 8;
    Deadline deadline;       // throws resource_error when exhausted
    bool want_witness = false;
};

struct OracleOutcome {
    /// Least palette size <= max_colors, or nullopt ("exceeds max_colors").
    std::optional<int> value;
    /// Witness coloring when requested and value is set.
    std::optional<ColorAssignment> witness;
};

/// Exact p-centered chromatic number by iterative deepening over the palette
/// size with index-order symmetry breaking; partial assignments are pruned by
/// an anchored violator search through the last colored vertex.
OracleOutcome chi_p_exact(const Graph& g, int p, const OracleOptions& opts);

/// Exact p-linear chromatic number; same search with the simple-path violator
/// check. The decision "is lin_p >= k" is chi-style: run with max_colors =
/// k - 1 and read nullopt as yes.
OracleOutcome lin_p_exact(const Graph& g, int p, const OracleOptions& opts);

}  // namespace pcc
