#include "pcc/chordal.hpp"

#include <algorithm>

namespace pcc {

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    ChordalityResult res;
    if (n == 0) {
        res.chordal = true;
        return res;
    }

    // Maximum-cardinality search: repeatedly pick the unvisited vertex with
    // most visited neighbors, ties to smallest index.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)])
                continue;
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;
        }
        visited[static_cast<std::size_t>(best)] = 1;
        visit_order.push_back(best);
        for (int w : g.neighbors(best))
            if (!visited[static_cast<std::size_t>(w)])
                ++weight[static_cast<std::size_t>(w)];
    }

    // Elimination order = reverse of the MCS visit order.
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(elim[static_cast<std::size_t>(i)])] = i;

    // Verify: the later neighbors of each vertex must form a clique; checking
    // them against the earliest later neighbor suffices.
    for (int i = 0; i < n; ++i) {
        int v = elim[static_cast<std::size_t>(i)];
        int parent = -1, ppos = n;
        for (int w : g.neighbors(v)) {
            int pw = pos[static_cast<std::size_t>(w)];
            if (pw > i && pw < ppos) {
                ppos = pw;
                parent = w;
            }
        }
        if (parent < 0)
            continue;
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > i && w != parent && !g.has_edge(parent, w))
                return res;
    }
    res.chordal = true;
    res.elimination_order = std::move(elim);
    return res;
}

}  // namespace pcc
