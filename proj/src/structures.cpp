#include "pcc/structures.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace pcc {

namespace {

Layering bfs_from_roots(const Graph& g, const std::vector<int>& roots) {
    const int n = g.vertex_count();
    Layering lay;
    lay.layer_of.assign(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int r : roots) {
        lay.layer_of[static_cast<std::size_t>(r)] = 0;
        q.push(r);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (lay.layer_of[static_cast<std::size_t>(w)] < 0) {
                lay.layer_of[static_cast<std::size_t>(w)] =
                    lay.layer_of[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        int l = lay.layer_of[static_cast<std::size_t>(v)];
        if (l < 0)
            throw input_error("roots do not cover every component");
        lay.layer_count = std::max(lay.layer_count, l + 1);
    }
    return lay;
}

}  // namespace

Layering bfs_layering(const Graph& g) {
    std::vector<int> roots;
    for (const auto& comp : connected_components(g)) roots.push_back(comp.front());
    return bfs_from_roots(g, roots);
}

Layering bfs_layering(const Graph& g, std::span<const int> roots) {
    auto comps = connected_components(g);
    if (roots.size() != comps.size())
        throw input_error("expected exactly one root per connected component");
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<char> hit(comps.size(), 0);
    std::vector<int> root_list;
    for (int r : roots) {
        if (r < 0 || r >= g.vertex_count())
            throw input_error("root out of range");
        int c = comp_of[static_cast<std::size_t>(r)];
        if (hit[static_cast<std::size_t>(c)])
            throw input_error("two roots in one component");
        hit[static_cast<std::size_t>(c)] = 1;
        root_list.push_back(r);
    }
    return bfs_from_roots(g, root_list);
}

bool validate_layering(const Graph& g, const Layering& lay) {
    if (static_cast<int>(lay.layer_of.size()) != g.vertex_count())
        return false;
    for (int l : lay.layer_of)
        if (l < 0 || l >= lay.layer_count)
            return false;
    for (auto [u, v] : g.edges()) {
        int d = lay.layer_of[static_cast<std::size_t>(u)] -
                lay.layer_of[static_cast<std::size_t>(v)];
        if (d < -1 || d > 1)
            return false;
    }
    return true;
}

bool validate_partition(const Graph& g, const VertexPartition& part) {
    if (static_cast<int>(part.class_of.size()) != g.vertex_count())
        return false;
    if (part.class_count < 0)
        return false;
    std::vector<int> size(static_cast<std::size_t>(part.class_count), 0);
    for (int c : part.class_of) {
        if (c < 0 || c >= part.class_count)
            return false;
        ++size[static_cast<std::size_t>(c)];
    }
    for (int s : size)
        if (s == 0)
            return false;
    return true;
}

Graph quotient(const Graph& g, const VertexPartition& part) {
    if (!validate_partition(g, part))
        throw input_error("invalid vertex partition");
    Graph q(part.class_count);
    for (auto [u, v] : g.edges()) {
        int a = part.class_of[static_cast<std::size_t>(u)];
        int b = part.class_of[static_cast<std::size_t>(v)];
        if (a != b)
            q.add_edge(a, b);
    }
    return q;
}

std::optional<std::pair<int, int>> find_layered_width_violation(const Graph& g,
                                                                const Layering& lay,
                                                                const VertexPartition& part,
                                                                int ell) {
    std::map<std::pair<int, int>, int> count;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto key = std::make_pair(part.class_of[static_cast<std::size_t>(v)],
                                  lay.layer_of[static_cast<std::size_t>(v)]);
        if (++count[key] > ell)
            return key;
    }
    return std::nullopt;
}

bool validate_partition_layered_width(const Graph& g, const Layering& lay,
                                      const VertexPartition& part, int ell) {
    if (!validate_layering(g, lay) || !validate_partition(g, part))
        return false;
    return !find_layered_width_violation(g, lay, part, ell).has_value();
}

bool validate_decomposition(const Graph& g, const SimpleTreeDecomposition& dec,
                            bool require_simple) {
    const int n = g.vertex_count();
    const int b = dec.tree.vertex_count();
    if (b < 1 || static_cast<int>(dec.bags.size()) != b)
        return false;
    // The bag graph must be a tree.
    if (dec.tree.edge_count() != static_cast<std::size_t>(b - 1))
        return false;
    if (connected_components(dec.tree).size() != 1)
        return false;

    int max_bag = 0;
    for (const auto& bag : dec.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || bag[i] >= n)
                return false;
            if (i > 0 && bag[i] <= bag[i - 1])
                return false;
        }
        max_bag = std::max(max_bag, static_cast<int>(bag.size()));
    }
    if (dec.width != max_bag - 1)
        return false;

    // Edge coverage.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : dec.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }

    // Per-vertex bag sets induce non-empty subtrees.
    std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
    for (int t = 0; t < b; ++t)
        for (int v : dec.bags[static_cast<std::size_t>(t)])
            bags_of[static_cast<std::size_t>(v)].push_back(t);
    for (int v = 0; v < n; ++v) {
        const auto& bv = bags_of[static_cast<std::size_t>(v)];
        if (bv.empty())
            return false;
        if (connected_components(dec.tree, bv).size() != 1)
            return false;
    }

    if (require_simple) {
        // Count, over all bags, the size-k subsets they contain (k = width,
        // but at least 1 so that edgeless hosts keep their path witnesses).
        const int k = std::max(dec.width, 1);
        std::map<std::vector<int>, int> seen;
        std::vector<int> subset;
        for (const auto& bag : dec.bags) {
            const int s = static_cast<int>(bag.size());
            if (s < k)
                continue;
            if (s == k) {
                if (++seen[bag] > 2)
                    return false;
            } else {
                // s == k + 1: drop one element at a time.
                for (int skip = 0; skip < s; ++skip) {
                    subset.clear();
                    for (int i = 0; i < s; ++i)
                        if (i != skip)
                            subset.push_back(bag[static_cast<std::size_t>(i)]);
                    if (++seen[subset] > 2)
                        return false;
                }
            }
        }
    }
    return true;
}

}  // namespace pcc
