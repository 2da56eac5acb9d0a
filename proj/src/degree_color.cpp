#include "pcc/degree_color.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pcc/rng.hpp"
#include "pcc/verifier.hpp"

namespace pcc {

long long degree_palette_size(int delta, int p, double scale, bool doubled) {
    if (delta < 0)
        throw input_error("maximum degree must be non-negative");
    if (p < 1)
        throw input_error("p must be at least 1");
    if (scale <= 0.0)
        throw input_error("palette scale must be positive");
    double raw = scale * 1024.0 * std::pow(static_cast<double>(delta), 2.0 - 1.0 / p) *
                 static_cast<double>(p);
    if (raw > 1e18)
        throw resource_error("palette size overflows");
    long long c = static_cast<long long>(std::ceil(raw));
    long long floor_value = delta == 1 ? 2 : 1;
    c = std::max(c, floor_value);
    return doubled ? 2 * c : c;
}

namespace {

/// First min(h, 2p) distinct vertices along a depth-first double traversal of
/// the BFS tree of `violator` rooted at `root` = the BFS-tree preorder prefix,
/// children visited in ascending index order.
std::vector<int> uncolor_prefix(const Graph& g, const std::vector<int>& violator, int root,
                                int limit) {
    std::vector<char> in_violator(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : violator) in_violator[static_cast<std::size_t>(v)] = 1;

    std::vector<std::vector<int>> children(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> reached(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> queue{root};
    reached[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {  // ascending
            if (in_violator[static_cast<std::size_t>(w)] && !reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                children[static_cast<std::size_t>(u)].push_back(w);
                queue.push_back(w);
            }
        }
    }

    std::vector<int> order;
    std::vector<int> stack{root};
    while (!stack.empty() && static_cast<int>(order.size()) < limit) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        const auto& ch = children[static_cast<std::size_t>(u)];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return order;
}

}  // namespace

std::optional<ColorAssignment> color_bounded_degree(const Graph& g, const DegreeColorConfig& cfg,
                                                    DegreeRunStats* stats_out) {
    const int n = g.vertex_count();
    if (cfg.p < 1)
        throw input_error("p must be at least 1");
    const int delta = g.max_degree();

    long long base = cfg.palette ? *cfg.palette
                                 : degree_palette_size(delta, cfg.p, cfg.palette_scale, false);
    if (base < 1)
        throw input_error("palette must be at least 1");
    long long c_eff = cfg.doubled_mode ? 2 * base : base;
    if (c_eff > std::numeric_limits<int>::max())
        throw resource_error("palette does not fit in int colors");

    long long cap = cfg.iteration_cap
                        ? *cfg.iteration_cap
                        : static_cast<long long>(
                              std::ceil(2.0 * n * std::log(2.0 * static_cast<double>(base) + 1.0))) +
                              64;
    cap = std::max(cap, static_cast<long long>(n));

    DegreeRunStats stats;
    stats.palette = c_eff;
    stats.base_palette = base;
    stats.cap = cap;

    Rng rng(cfg.seed);
    std::vector<int> colors(static_cast<std::size_t>(n), kUncolored);
    int colored = 0;
    int first_uncolored = 0;
    const int two_p = 2 * cfg.p;

    while (stats.iterations < cap) {
        if (colored == n)
            break;
        ++stats.iterations;
        while (colors[static_cast<std::size_t>(first_uncolored)] != kUncolored) ++first_uncolored;
        const int w = first_uncolored;

        // Exactly one draw per iteration, before any branching.
        colors[static_cast<std::size_t>(w)] = static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(c_eff)));
        ++colored;
        int delta_colored = 1;
        int violator_size = 0;
        int uncolored_now = 0;

        if (auto viol = find_violator_containing(g, colors, cfg.p, w)) {
            ++stats.violators;
            violator_size = static_cast<int>(viol->vertices.size());
            uncolored_now = std::min(violator_size, two_p);
            auto victims = uncolor_prefix(g, viol->vertices, w, uncolored_now);
            if (static_cast<int>(victims.size()) != uncolored_now || victims.front() != w)
                throw internal_error("uncoloring traversal did not cover the expected prefix");
            for (int u : victims) colors[static_cast<std::size_t>(u)] = kUncolored;
            colored -= uncolored_now;
            delta_colored = 1 - uncolored_now;
            stats.uncolored_total += uncolored_now;
            first_uncolored = std::min(first_uncolored,
                                       *std::min_element(victims.begin(), victims.end()));
        }

        if (cfg.record_trace)
            stats.trace.push_back({delta_colored, violator_size, uncolored_now});
        if (cfg.paranoid_checks && n <= 200 && has_any_violator(g, colors, cfg.p))
            throw internal_error("violator survived an iteration");
    }

    stats.rng_draws = rng.draws();
    stats.success = colored == n;
    if (!stats.success) {
        stats.partial = colors;
        if (stats_out)
            *stats_out = std::move(stats);
        return std::nullopt;
    }
    if (stats_out)
        *stats_out = std::move(stats);
    return ColorAssignment::from_flat(std::move(colors), static_cast<int>(c_eff));
}

}  // namespace pcc
