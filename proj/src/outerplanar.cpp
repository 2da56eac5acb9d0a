#include "pcc/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pcc/chordal.hpp"
#include "pcc/common.hpp"

namespace pcc {

bool layout_is_noncrossing(const Graph& g, const OuterplanarLayout& layout) {
    const int n = g.vertex_count();
    if (static_cast<int>(layout.order.size()) != n)
        return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = layout.order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            return false;
        pos[static_cast<std::size_t>(v)] = i;
    }
    auto edges = g.edges();
    std::vector<std::pair<int, int>> iv;
    iv.reserve(edges.size());
    for (auto [u, v] : edges) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        iv.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (std::size_t i = 0; i < iv.size(); ++i)
        for (std::size_t j = i + 1; j < iv.size(); ++j) {
            auto [a1, b1] = iv[i];
            auto [a2, b2] = iv[j];
            if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
                return false;
        }
    return true;
}

namespace {

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> child_idx(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<std::size_t>(s)] != -1)
            continue;
        std::vector<int> stack{s};
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (child_idx[static_cast<std::size_t>(u)] < g.degree(u)) {
                int w = g.neighbors(u)[static_cast<std::size_t>(child_idx[static_cast<std::size_t>(u)]++)];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = u;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    edge_stack.emplace_back(u, w);
                    stack.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)] &&
                           disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
                    edge_stack.emplace_back(u, w);
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int par = stack.back();
                    low[static_cast<std::size_t>(par)] =
                        std::min(low[static_cast<std::size_t>(par)], low[static_cast<std::size_t>(u)]);
                    if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(par)]) {
                        std::vector<Edge> blk;
                        while (true) {
                            Edge e = edge_stack.back();
                            edge_stack.pop_back();
                            blk.push_back(e);
                            if (e.first == par && e.second == u)
                                break;
                        }
                        blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    return blocks;
}

/// Outer cycle of a biconnected outerplanar block, recovered by peeling
/// degree-2 vertices (the unique Hamiltonian cycle passes through both of
/// their edges) and splicing them back. nullopt when the block cannot be
/// outerplanar.
std::optional<std::vector<int>> block_outer_cycle(const std::vector<Edge>& block_edges) {
    std::map<int, std::set<int>> adj;
    for (auto [u, v] : block_edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    if (adj.size() <= 2) {
        std::vector<int> order;
        for (const auto& [v, nbrs] : adj) order.push_back(v);
        return order;
    }

    struct Peel {
        int v, a, b;
    };
    std::vector<Peel> history;
    std::set<int> degree_two;
    for (const auto& [v, nbrs] : adj)
        if (nbrs.size() == 2)
            degree_two.insert(v);

    while (adj.size() > 3) {
        if (degree_two.empty())
            return std::nullopt;
        int v = *degree_two.begin();
        degree_two.erase(degree_two.begin());
        auto it = adj.find(v);
        if (it == adj.end() || it->second.size() != 2)
            continue;  // stale entry
        int a = *it->second.begin();
        int b = *std::next(it->second.begin());
        adj.erase(it);
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
        if (adj[a].size() < 2 || adj[b].size() < 2)
            return std::nullopt;
        if (adj[a].size() == 2)
            degree_two.insert(a);
        if (adj[b].size() == 2)
            degree_two.insert(b);
        history.push_back({v, a, b});
    }

    std::vector<int> cycle;
    for (const auto& [v, nbrs] : adj) {
        if (nbrs.size() != 2)
            return std::nullopt;
        cycle.push_back(v);
    }
    for (std::size_t i = 0; i < 3; ++i)
        if (!adj[cycle[i]].count(cycle[(i + 1) % 3]))
            return std::nullopt;

    for (auto it = history.rbegin(); it != history.rend(); ++it) {
        auto pa = std::find(cycle.begin(), cycle.end(), it->a);
        auto pb = std::find(cycle.begin(), cycle.end(), it->b);
        if (pa == cycle.end() || pb == cycle.end())
            return std::nullopt;
        std::size_t ia = static_cast<std::size_t>(pa - cycle.begin());
        std::size_t ib = static_cast<std::size_t>(pb - cycle.begin());
        if (ia > ib)
            std::swap(ia, ib);
        if (ib == ia + 1)
            cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(ib), it->v);
        else if (ia == 0 && ib == cycle.size() - 1)
            cycle.push_back(it->v);
        else
            return std::nullopt;  // the splice points are not cycle-adjacent
    }
    return cycle;
}

std::optional<OuterplanarLayout> layout_by_blocks(const Graph& g) {
    auto comps = connected_components(g);
    auto block_edges = biconnected_blocks(g);

    std::vector<std::vector<int>> cycles;
    cycles.reserve(block_edges.size());
    for (const auto& blk : block_edges) {
        auto cyc = block_outer_cycle(blk);
        if (!cyc)
            return std::nullopt;
        cycles.push_back(std::move(*cyc));
    }
    // Deterministic expansion order: blocks sorted by minimum vertex.
    std::vector<std::size_t> block_order(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) block_order[i] = i;
    std::vector<int> block_min(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        block_min[i] = *std::min_element(cycles[i].begin(), cycles[i].end());
    std::sort(block_order.begin(), block_order.end(), [&](std::size_t x, std::size_t y) {
        return block_min[x] != block_min[y] ? block_min[x] < block_min[y] : x < y;
    });

    std::vector<std::vector<std::size_t>> blocks_at(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t bi : block_order)
        for (int v : cycles[bi]) blocks_at[static_cast<std::size_t>(v)].push_back(bi);

    std::vector<char> visited(cycles.size(), 0);
    OuterplanarLayout layout;
    layout.order.reserve(static_cast<std::size_t>(g.vertex_count()));

    // Emit a block's cycle starting after the entry cut vertex, recursively
    // expanding the other blocks hanging off each vertex.
    auto expand = [&](auto&& self, std::size_t bi, int entry) -> void {
        visited[bi] = 1;
        const auto& cyc = cycles[bi];
        std::size_t start = static_cast<std::size_t>(
            std::find(cyc.begin(), cyc.end(), entry) - cyc.begin());
        for (std::size_t step = 1; step < cyc.size(); ++step) {
            int u = cyc[(start + step) % cyc.size()];
            layout.order.push_back(u);
            for (std::size_t b2 : blocks_at[static_cast<std::size_t>(u)])
                if (!visited[b2])
                    self(self, b2, u);
        }
    };

    for (const auto& comp : comps) {
        int root = comp.front();
        layout.order.push_back(root);
        for (std::size_t bi : blocks_at[static_cast<std::size_t>(root)])
            if (!visited[bi])
                expand(expand, bi, root);
    }
    if (static_cast<int>(layout.order.size()) != g.vertex_count())
        return std::nullopt;
    return layout;
}

}  // namespace

std::optional<OuterplanarLayout> find_outerplanar_layout(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return OuterplanarLayout{};
    if (auto layout = layout_by_blocks(g)) {
        if (layout_is_noncrossing(g, *layout))
            return layout;
    }
    // Exhaustive fallback for tiny graphs.
    if (n <= 9) {
        OuterplanarLayout cand;
        cand.order.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cand.order[static_cast<std::size_t>(i)] = i;
        do {
            if (layout_is_noncrossing(g, cand))
                return cand;
        } while (std::next_permutation(cand.order.begin() + 1, cand.order.end()));
    }
    return std::nullopt;
}

std::pair<Graph, OuterplanarLayout> complete_to_maximal_outerplanar(
    const Graph& g, const std::optional<OuterplanarLayout>& layout_in) {
    const int n = g.vertex_count();
    OuterplanarLayout layout;
    if (layout_in) {
        layout = *layout_in;
        if (!layout_is_noncrossing(g, layout))
            throw input_error("not outerplanar: provided layout is invalid or has crossing edges");
    } else {
        auto found = find_outerplanar_layout(g);
        if (!found)
            throw input_error("not outerplanar: no non-crossing circular layout exists");
        layout = std::move(*found);
    }

    Graph gp = g;
    if (n <= 1)
        return {gp, layout};
    if (n == 2) {
        gp.add_edge(0, 1);
        return {gp, layout};
    }

    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(layout.order[static_cast<std::size_t>(i)])] = i;
    auto vertex_at = [&](int i) { return layout.order[static_cast<std::size_t>(i)]; };

    // Outer cycle.
    for (int i = 0; i < n; ++i) gp.add_edge(vertex_at(i), vertex_at((i + 1) % n));

    // Existing chords as position intervals, then the laminar containment
    // forest (non-crossing chords nest or are disjoint).
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        if (a > b)
            std::swap(a, b);
        if (b - a >= 2 && !(a == 0 && b == n - 1))
            chords.emplace_back(a, b);
    }
    std::sort(chords.begin(), chords.end(), [](auto x, auto y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    const int root = -1;
    std::vector<std::vector<int>> children(chords.size() + 1);  // children[i+1] for chord i
    std::vector<int> stack_idx;
    for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
        while (!stack_idx.empty()) {
            auto top = chords[static_cast<std::size_t>(stack_idx.back())];
            if (top.first <= chords[static_cast<std::size_t>(i)].first &&
                chords[static_cast<std::size_t>(i)].second <= top.second)
                break;
            stack_idx.pop_back();
        }
        int parent = stack_idx.empty() ? root : stack_idx.back();
        children[static_cast<std::size_t>(parent + 1)].push_back(i);
        stack_idx.push_back(i);
    }

    // Triangulate the face bounded by interval (a, b) and its child chords by
    // a fan from the face's smallest-index vertex.
    auto triangulate_face = [&](int a, int b, const std::vector<int>& kids) {
        std::vector<int> seq{a};
        std::size_t ci = 0;
        int x = a;
        while (x < b) {
            if (ci < kids.size() && chords[static_cast<std::size_t>(kids[ci])].first == x)
                x = chords[static_cast<std::size_t>(kids[ci++])].second;
            else
                x += 1;
            seq.push_back(x);
        }
        if (seq.size() < 4)
            return;  // already a triangle or an edge
        std::size_t anchor = 0;
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (vertex_at(seq[i]) < vertex_at(seq[anchor]))
                anchor = i;
        const std::size_t len = seq.size();
        for (std::size_t i = 0; i < len; ++i) {
            if (i == anchor || (i + 1) % len == anchor || (anchor + 1) % len == i)
                continue;
            gp.add_edge(vertex_at(seq[anchor]), vertex_at(seq[i]));
        }
    };

    triangulate_face(0, n - 1, children[0]);
    for (std::size_t i = 0; i < chords.size(); ++i)
        triangulate_face(chords[i].first, chords[i].second, children[i + 1]);

    if (gp.edge_count() != static_cast<std::size_t>(2 * n - 3))
        throw internal_error("completion is not maximal outerplanar: edge count " +
                             std::to_string(gp.edge_count()) + " of expected " +
                             std::to_string(2 * n - 3));
    return {gp, layout};
}

InOrderTree::InOrderTree(int p) : p_(p) {
    if (p < 0)
        throw input_error("label count must be non-negative");
    ancestors_.resize(static_cast<std::size_t>(p) + 1);
    std::vector<int> path;
    auto build = [&](auto&& self, int lo, int hi) -> void {
        if (lo > hi)
            return;
        int mid = (lo + hi) / 2;
        path.push_back(mid);
        ancestors_[static_cast<std::size_t>(mid)] = path;
        std::sort(ancestors_[static_cast<std::size_t>(mid)].begin(),
                  ancestors_[static_cast<std::size_t>(mid)].end());
        self(self, lo, mid - 1);
        self(self, mid + 1, hi);
        path.pop_back();
    };
    build(build, 1, p);
    height_ = p == 0 ? 0 : ceil_log2(p + 1);
    for (const auto& anc : ancestors_)
        if (static_cast<int>(anc.size()) > height_)
            throw internal_error("in-order tree deeper than ceil(log2(p+1))");
}

const std::vector<int>& InOrderTree::ancestors_of(int label) const {
    if (label < 0 || label > p_)
        throw input_error("label out of range");
    return ancestors_[static_cast<std::size_t>(label)];
}

namespace {

struct AboveInfo {
    std::vector<std::vector<int>> comps;    // sorted vertex lists, by min vertex
    std::vector<std::vector<int>> shadows;  // sorted layer-i neighbor sets
    std::vector<int> comp_of;               // -1 for vertices not above the layer
};

AboveInfo above_components(const Graph& g, const Layering& lay, int layer) {
    const int n = g.vertex_count();
    AboveInfo info;
    info.comp_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> above;
    for (int v = 0; v < n; ++v)
        if (lay.layer_of[static_cast<std::size_t>(v)] > layer)
            above.push_back(v);
    info.comps = connected_components(g, above);
    for (std::size_t c = 0; c < info.comps.size(); ++c)
        for (int v : info.comps[c]) info.comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    info.shadows.resize(info.comps.size());
    for (std::size_t c = 0; c < info.comps.size(); ++c) {
        std::set<int> sh;
        for (int v : info.comps[c])
            for (int w : g.neighbors(v))
                if (lay.layer_of[static_cast<std::size_t>(w)] == layer)
                    sh.insert(w);
        info.shadows[c].assign(sh.begin(), sh.end());
    }
    return info;
}

void assert_shadow_clique(const Graph& g, const std::vector<int>& shadow) {
    for (std::size_t i = 0; i < shadow.size(); ++i)
        for (std::size_t j = i + 1; j < shadow.size(); ++j)
            if (!g.has_edge(shadow[i], shadow[j]))
                throw internal_error("shadow is not a clique");
}

}  // namespace

std::vector<ShadowEntry> shadows(const Graph& gplus, const Layering& lay, int layer) {
    if (static_cast<int>(lay.layer_of.size()) != gplus.vertex_count() ||
        !validate_layering(gplus, lay))
        throw input_error("invalid layering for shadow computation");
    if (layer < 0)
        throw input_error("layer must be non-negative");
    if (!is_chordal(gplus).chordal)
        throw input_error("shadow computation requires a chordal graph");
    auto info = above_components(gplus, lay, layer);
    std::vector<ShadowEntry> out;
    for (std::size_t c = 0; c < info.comps.size(); ++c) {
        assert_shadow_clique(gplus, info.shadows[c]);
        out.push_back({info.comps[c], info.shadows[c]});
    }
    return out;
}

long long outerplanar_palette_bound(int p) {
    if (p < 1)
        throw input_error("p must be at least 1");
    return static_cast<long long>(p) * ceil_log2(p + 1) + 2LL * p + 1;
}

namespace {

/// The layer-by-layer coloring engine for one connected maximal outerplanar
/// graph. Returns flat colors within 0..K-1.
std::vector<int> color_maximal_outerplanar(const Graph& gp, int p) {
    const int n = gp.vertex_count();
    const int K = static_cast<int>(outerplanar_palette_bound(p));
    const int clog = ceil_log2(p + 1);
    const int forbid_cap = p * clog + p;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    if (n == 0)
        return colors;

    if (!is_chordal(gp).chordal)
        throw internal_error("completed graph is not chordal");

    Layering lay = bfs_layering(gp);
    std::vector<std::vector<int>> layer_vertices(static_cast<std::size_t>(lay.layer_count));
    for (int v = 0; v < n; ++v)
        layer_vertices[static_cast<std::size_t>(lay.layer_of[static_cast<std::size_t>(v)])]
            .push_back(v);

    // Layer paths: components of each layer-induced subgraph, which must be
    // paths; oriented from the lower-index endpoint.
    struct LayerPath {
        std::vector<int> verts;
    };
    std::vector<LayerPath> paths;
    std::vector<int> path_of(static_cast<std::size_t>(n), -1);
    std::vector<int> pos_on_path(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> paths_in_layer(static_cast<std::size_t>(lay.layer_count));

    for (int L = 0; L < lay.layer_count; ++L) {
        auto comps = connected_components(gp, layer_vertices[static_cast<std::size_t>(L)]);
        for (const auto& comp : comps) {
            // Degrees within the layer component.
            auto layer_degree = [&](int v) {
                int d = 0;
                for (int w : gp.neighbors(v))
                    if (lay.layer_of[static_cast<std::size_t>(w)] == L &&
                        std::binary_search(comp.begin(), comp.end(), w))
                        ++d;
                return d;
            };
            std::size_t edge_count = 0;
            int start = -1;
            for (int v : comp) {
                int d = layer_degree(v);
                if (d > 2)
                    throw internal_error("layer graph is not a linear forest: vertex degree " +
                                         std::to_string(d));
                edge_count += static_cast<std::size_t>(d);
                if (d <= 1 && (start == -1 || v < start))
                    start = v;
            }
            edge_count /= 2;
            if (start == -1 || edge_count != comp.size() - 1)
                throw internal_error("layer graph component is not a path");

            LayerPath path;
            path.verts.reserve(comp.size());
            int prev = -1, cur = start;
            while (true) {
                path.verts.push_back(cur);
                int next = -1;
                for (int w : gp.neighbors(cur)) {
                    if (w != prev && lay.layer_of[static_cast<std::size_t>(w)] == L &&
                        std::binary_search(comp.begin(), comp.end(), w)) {
                        next = w;
                        break;
                    }
                }
                if (next == -1)
                    break;
                prev = cur;
                cur = next;
            }
            if (path.verts.size() != comp.size())
                throw internal_error("layer path walk did not cover its component");

            int pid = static_cast<int>(paths.size());
            for (std::size_t i = 0; i < path.verts.size(); ++i) {
                path_of[static_cast<std::size_t>(path.verts[i])] = pid;
                pos_on_path[static_cast<std::size_t>(path.verts[i])] = static_cast<int>(i);
            }
            paths_in_layer[static_cast<std::size_t>(L)].push_back(pid);
            paths.push_back(std::move(path));
        }
    }

    InOrderTree tree(p);
    std::vector<std::set<int>> forbidden(paths.size());
    std::vector<std::vector<int>> path_palette(paths.size());

    for (int L = 0; L < lay.layer_count; ++L) {
        for (int pid : paths_in_layer[static_cast<std::size_t>(L)]) {
            auto& forbid = forbidden[static_cast<std::size_t>(pid)];
            if (static_cast<int>(forbid.size()) > forbid_cap)
                throw internal_error("forbidden set exceeded its bound on a layer path");
            auto& palette = path_palette[static_cast<std::size_t>(pid)];
            for (int c = 0; c < K && static_cast<int>(palette.size()) < p + 1; ++c)
                if (!forbid.count(c))
                    palette.push_back(c);
            if (static_cast<int>(palette.size()) < p + 1)
                throw internal_error("fewer than p+1 colors available for a layer path");
            const auto& verts = paths[static_cast<std::size_t>(pid)].verts;
            for (std::size_t i = 0; i < verts.size(); ++i)
                colors[static_cast<std::size_t>(verts[i])] =
                    palette[static_cast<std::size_t>(i % static_cast<std::size_t>(p + 1))];
        }

        if (L + 1 >= lay.layer_count)
            continue;
        // Donor updates: every layer path within the next p layers whose
        // shadow lies on path P inherits P's base color and the in-order
        // ancestor colors of the shadow colors.
        auto above = above_components(gp, lay, L);
        std::vector<std::vector<int>> donor(above.comps.size());
        for (std::size_t c = 0; c < above.comps.size(); ++c) {
            const auto& sh = above.shadows[c];
            if (sh.empty())
                throw internal_error("component above a layer has an empty shadow");
            if (sh.size() > 2)
                throw internal_error("shadow larger than two vertices");
            assert_shadow_clique(gp, sh);
            int pid = path_of[static_cast<std::size_t>(sh.front())];
            const auto& palette = path_palette[static_cast<std::size_t>(pid)];
            std::set<int> add{palette[0]};
            for (int v : sh) {
                if (path_of[static_cast<std::size_t>(v)] != pid)
                    throw internal_error("shadow spans two layer paths");
                int label = pos_on_path[static_cast<std::size_t>(v)] % (p + 1);
                for (int a : tree.ancestors_of(label))
                    add.insert(palette[static_cast<std::size_t>(a)]);
            }
            if (static_cast<int>(add.size()) > clog + 1)
                throw internal_error("donor layer adds more than ceil(log2(p+1))+1 colors");
            donor[c].assign(add.begin(), add.end());
        }
        int top = std::min(L + p, lay.layer_count - 1);
        for (int k = L + 1; k <= top; ++k) {
            for (int pid : paths_in_layer[static_cast<std::size_t>(k)]) {
                int cid = above.comp_of[static_cast<std::size_t>(
                    paths[static_cast<std::size_t>(pid)].verts.front())];
                if (cid < 0)
                    throw internal_error("layer path not found above its donor layer");
                forbidden[static_cast<std::size_t>(pid)].insert(donor[static_cast<std::size_t>(cid)].begin(),
                                                                donor[static_cast<std::size_t>(cid)].end());
            }
        }
    }
    return colors;
}

}  // namespace

ColorAssignment color_outerplanar(const Graph& g, int p,
                                  const std::optional<OuterplanarLayout>& layout) {
    if (p < 1)
        throw input_error("p must be at least 1");
    const int n = g.vertex_count();
    const int K = static_cast<int>(outerplanar_palette_bound(p));
    ColorAssignment result(n, {K});
    if (n == 0)
        return result;

    std::vector<int> pos;
    if (layout) {
        if (!layout_is_noncrossing(g, *layout))
            throw input_error("not outerplanar: provided layout is invalid or has crossing edges");
        pos.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>((*layout).order[static_cast<std::size_t>(i)])] = i;
    }

    for (const auto& comp : connected_components(g)) {
        std::vector<int> index_of;
        Graph sub = induced_subgraph(g, comp, &index_of);
        std::optional<OuterplanarLayout> sub_layout;
        if (layout) {
            // The component's circular subsequence of the global order.
            std::vector<int> by_pos(comp);
            std::sort(by_pos.begin(), by_pos.end(), [&](int a, int b) {
                return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
            });
            OuterplanarLayout sl;
            for (int v : by_pos) sl.order.push_back(index_of[static_cast<std::size_t>(v)]);
            sub_layout = std::move(sl);
        }
        auto [gp, used_layout] = complete_to_maximal_outerplanar(sub, sub_layout);
        auto colors = color_maximal_outerplanar(gp, p);
        for (std::size_t i = 0; i < comp.size(); ++i)
            result.set(comp[i], 0, colors[i]);
    }
    return result;
}

}  // namespace pcc
