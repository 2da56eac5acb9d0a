#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/common.hpp"
#include "pcc/graph.hpp"

namespace pcc {

/// Palette for the bounded-degree colorer: ceil(scale * 2^10 * Delta^(2-1/p) * p),
/// doubled when `doubled`; lower-bounded by 1 (Delta = 0) or 2 (Delta = 1).
long long degree_palette_size(int delta, int p, double scale = 1.0, bool doubled = false);

struct DegreeColorConfig {
    int p = 1;
    std::optional<long long> palette;        // base palette; default from the formula
    bool doubled_mode = false;               // run with twice the base palette
    std::optional<long long> iteration_cap;  // default ceil(2 n ln(2c+1)) + 64
    std::uint64_t seed = 0;
    double palette_scale = 1.0;
    bool paranoid_checks = false;            // full violator scan after every iteration
    bool record_trace = false;
};

struct DegreeRunStats {
    bool success = false;
    long long iterations = 0;
    long long violators = 0;
    long long uncolored_total = 0;
    long long palette = 0;        // effective palette actually drawn from
    long long base_palette = 0;   // pre-doubling palette
    long long cap = 0;
    std::uint64_t rng_draws = 0;
    std::vector<int> partial;     // partial coloring on failure

    struct TraceEntry {
        int colored_delta;   // +1, or 1 - min(h, 2p)
        int violator_size;   // h, 0 when no violator
        int uncolored;       // min(h, 2p), 0 when no violator
    };
    std::vector<TraceEntry> trace;  // filled when record_trace
};

/// Randomized p-centered coloring loop: color the first uncolored vertex in
/// index order with a seeded random draw; when that creates a violator, build
/// a BFS spanning tree of it rooted at the new vertex and uncolor the first
/// min(|H|, 2p) distinct vertices along its depth-first double traversal.
/// Returns nullopt when the iteration cap is hit; the partial coloring and
/// counters are in `stats`.
std::optional<ColorAssignment> color_bounded_degree(const Graph& g, const DegreeColorConfig& cfg,
                                                    DegreeRunStats* stats = nullptr);

}  // namespace pcc
