#include "pcc/generators.hpp"

#include <algorithm>
#include <string>

#include "pcc/rng.hpp"

namespace pcc {

namespace {

constexpr unsigned long long kSat = 1ULL << 62;

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    return (a >= kSat || b >= kSat || a + b >= kSat) ? kSat : a + b;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0)
        return 0;
    if (a >= kSat || b >= kSat || a > kSat / b)
        return kSat;
    return a * b;
}

unsigned long long sat_pow(unsigned long long base, unsigned long long exp) {
    unsigned long long r = 1;
    for (unsigned long long i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r >= kSat)
            return kSat;
    }
    return r;
}

unsigned long long sat_binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::vector<unsigned long long> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = sat_add(row[static_cast<std::size_t>(j)],
                                                       row[static_cast<std::size_t>(j - 1)]);
    return row[static_cast<std::size_t>(k)];
}

void check_cap(unsigned long long size, long long cap, const char* what) {
    if (cap < 0 || size > static_cast<unsigned long long>(cap))
        throw resource_error(std::string(what) + " would have " +
                             (size >= kSat ? std::string(">= 2^62") : std::to_string(size)) +
                             " vertices, above the cap of " + std::to_string(cap));
}

}  // namespace

unsigned long long tree_of_fans_size(int w, int d) {
    unsigned long long total = 0, level = 1;
    for (int j = 0; j <= d; ++j) {
        total = sat_add(total, level);
        level = sat_mul(level, static_cast<unsigned long long>(w));
    }
    return total;
}

Graph tree_of_fans(int w, int d, long long size_cap) {
    if (w < 1 || d < 0)
        throw input_error("tree of fans requires w >= 1 and d >= 0");
    unsigned long long size = tree_of_fans_size(w, d);
    check_cap(size, size_cap, "tree of fans");
    const int n = static_cast<int>(size);
    Graph g(n);
    // offset of level j, then children of (j, t) are (j+1, w t .. w t + w - 1).
    long long offset = 0, level_size = 1;
    for (int j = 0; j < d; ++j) {
        long long next_offset = offset + level_size;
        for (long long t = 0; t < level_size; ++t) {
            long long parent = offset + t;
            for (int q = 0; q < w; ++q) {
                long long child = next_offset + t * w + q;
                g.add_edge(static_cast<int>(parent), static_cast<int>(child));
                if (q + 1 < w)
                    g.add_edge(static_cast<int>(child), static_cast<int>(child + 1));
            }
        }
        offset = next_offset;
        level_size *= w;
    }
    return g;
}

unsigned long long g_k_graph_size(int k, int w, int d) {
    if (k < 2 || w < 1 || d < 1)
        return 0;
    unsigned long long s = tree_of_fans_size(w, d);
    unsigned long long b = sat_pow(static_cast<unsigned long long>(w),
                                   static_cast<unsigned long long>(d));
    for (int j = 3; j <= k; ++j) {
        unsigned long long s1 = s, b1 = b;
        for (int delta = 1; delta < d; ++delta) {
            s = sat_add(s, sat_mul(b, s1 - 1));
            b = sat_mul(b, b1);
        }
    }
    return s;
}

GkGraph g_k_graph(int k, int w, int d, long long size_cap) {
    if (k < 2 || w < 1 || d < 1)
        throw input_error("g_k graph requires k >= 2, w >= 1, d >= 1");
    check_cap(g_k_graph_size(k, w, d), size_cap, "g_k graph");

    GkGraph cur;
    cur.graph = tree_of_fans(w, d, size_cap);
    cur.root = 0;
    // Boundary of the tree of fans: the deepest level.
    {
        long long offset = 0, level_size = 1;
        for (int j = 0; j < d; ++j) {
            offset += level_size;
            level_size *= w;
        }
        for (long long t = 0; t < level_size; ++t)
            cur.boundary.push_back(static_cast<int>(offset + t));
    }

    for (int j = 3; j <= k; ++j) {
        // G_j(w, d, 1): make the root universal.
        GkGraph base = cur;
        for (int u = 0; u < base.graph.vertex_count(); ++u)
            if (u != base.root)
                base.graph.add_edge(base.root, u);

        // G_j(w, d, delta+1): glue a copy of base onto every boundary vertex,
        // identifying the copy's root with it.
        GkGraph acc = base;
        auto base_edges = base.graph.edges();
        for (int delta = 1; delta < d; ++delta) {
            std::vector<int> new_boundary;
            Graph grown(acc.graph.vertex_count() +
                        static_cast<int>(acc.boundary.size()) *
                            (base.graph.vertex_count() - 1));
            for (auto [u, v] : acc.graph.edges()) grown.add_edge(u, v);
            int offset = acc.graph.vertex_count();
            for (int u : acc.boundary) {
                auto map_vertex = [&](int t) { return t == base.root ? u : offset + (t < base.root ? t : t - 1); };
                for (auto [a, b] : base_edges) grown.add_edge(map_vertex(a), map_vertex(b));
                for (int t : base.boundary) new_boundary.push_back(map_vertex(t));
                offset += base.graph.vertex_count() - 1;
            }
            acc.graph = std::move(grown);
            acc.boundary = std::move(new_boundary);
        }
        cur = std::move(acc);
    }
    std::sort(cur.boundary.begin(), cur.boundary.end());
    return cur;
}

unsigned long long lower_bound_graph_size(int p, int t, unsigned long long x,
                                          unsigned long long n_colors) {
    if (p == 0 || t == 0)
        return 1;
    unsigned long long m = sat_binom(p + t - 1, t - 1);
    unsigned long long big_x = sat_add(sat_mul(x - 1, sat_pow(n_colors, m)), 1);
    unsigned long long host = lower_bound_graph_size(p - 1, t, big_x, n_colors);
    unsigned long long pendant = lower_bound_graph_size(p, t - 1, x, n_colors);
    return sat_mul(host, sat_add(1, sat_mul(big_x, pendant)));
}

namespace {

Graph build_lower_bound(int p, int t, unsigned long long x, unsigned long long n_colors) {
    if (p == 0 || t == 0)
        return Graph(1);
    unsigned long long m = sat_binom(p + t - 1, t - 1);
    unsigned long long big_x = sat_add(sat_mul(x - 1, sat_pow(n_colors, m)), 1);
    Graph host = build_lower_bound(p - 1, t, big_x, n_colors);
    Graph pendant = build_lower_bound(p, t - 1, x, n_colors);
    auto pendant_edges = pendant.edges();

    const int n0 = host.vertex_count();
    const int nc = pendant.vertex_count();
    const long long copies = static_cast<long long>(big_x);
    Graph g(static_cast<int>(n0 + static_cast<long long>(n0) * copies * nc));
    for (auto [u, v] : host.edges()) g.add_edge(u, v);
    int offset = n0;
    for (int v = 0; v < n0; ++v) {
        for (long long i = 0; i < copies; ++i) {
            for (auto [a, b] : pendant_edges) g.add_edge(offset + a, offset + b);
            for (int u = 0; u < nc; ++u) g.add_edge(v, offset + u);
            offset += nc;
        }
    }
    return g;
}

}  // namespace

Graph lower_bound_graph(int p, int t, long long x, long long n_colors, long long size_cap) {
    if (p < 0 || t < 0 || x < 2 || n_colors < 1)
        throw input_error("lower bound graph requires p, t >= 0, x >= 2, N >= 1");
    unsigned long long size = lower_bound_graph_size(p, t, static_cast<unsigned long long>(x),
                                                     static_cast<unsigned long long>(n_colors));
    check_cap(size, size_cap, "lower bound graph");
    return build_lower_bound(p, t, static_cast<unsigned long long>(x),
                             static_cast<unsigned long long>(n_colors));
}

GeneratedDecomposedGraph random_maximal_outerplanar(int n, std::uint64_t seed) {
    if (n < 1)
        throw input_error("need at least one vertex");
    GeneratedDecomposedGraph out;
    out.graph = Graph(n);
    if (n == 1) {
        out.decomposition.tree = Graph(1);
        out.decomposition.bags = {{0}};
        out.decomposition.width = 0;
        return out;
    }
    if (n == 2) {
        out.graph.add_edge(0, 1);
        out.decomposition.tree = Graph(1);
        out.decomposition.bags = {{0, 1}};
        out.decomposition.width = 1;
        return out;
    }

    Rng rng(seed);
    for (int i = 0; i < n; ++i) out.graph.add_edge(i, (i + 1) % n);
    std::vector<std::vector<int>> bags;
    std::vector<Edge> tree_edges;
    // Triangulate the polygon arc a..b (with base chord (a, b)) around a
    // random apex; returns the bag index of the base triangle.
    auto recurse = [&](auto&& self, int a, int b) -> int {
        if (b - a < 2)
            return -1;
        int c = a + 1 + rng.next_int(b - a - 1);
        out.graph.add_edge(a, c);
        out.graph.add_edge(c, b);
        int bag = static_cast<int>(bags.size());
        bags.push_back({a, c, b});
        std::sort(bags.back().begin(), bags.back().end());
        int left = self(self, a, c);
        int right = self(self, c, b);
        if (left >= 0)
            tree_edges.emplace_back(bag, left);
        if (right >= 0)
            tree_edges.emplace_back(bag, right);
        return bag;
    };
    recurse(recurse, 0, n - 1);
    out.decomposition.tree = Graph::from_edges(static_cast<int>(bags.size()), tree_edges);
    out.decomposition.bags = std::move(bags);
    out.decomposition.width = 2;
    return out;
}

GeneratedDecomposedGraph random_stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3)
        throw input_error("stacked triangulation needs at least 3 vertices");
    GeneratedDecomposedGraph out;
    out.graph = Graph(n);
    out.graph.add_edge(0, 1);
    out.graph.add_edge(0, 2);
    out.graph.add_edge(1, 2);
    if (n == 3) {
        out.decomposition.tree = Graph(1);
        out.decomposition.bags = {{0, 1, 2}};
        out.decomposition.width = 2;
        return out;
    }

    Rng rng(seed);
    struct Face {
        int a, b, c, creator;
    };
    std::vector<Face> faces{{0, 1, 2, -1}};
    std::vector<std::vector<int>> bags;
    std::vector<Edge> tree_edges;
    for (int v = 3; v < n; ++v) {
        std::size_t f = rng.next_below(faces.size());
        Face face = faces[f];
        out.graph.add_edge(face.a, v);
        out.graph.add_edge(face.b, v);
        out.graph.add_edge(face.c, v);
        int bag = static_cast<int>(bags.size());
        bags.push_back({face.a, face.b, face.c, v});
        std::sort(bags.back().begin(), bags.back().end());
        if (face.creator >= 0)
            tree_edges.emplace_back(bag, face.creator);
        faces[f] = {face.a, face.b, v, bag};
        faces.push_back({face.a, face.c, v, bag});
        faces.push_back({face.b, face.c, v, bag});
    }
    out.decomposition.tree = Graph::from_edges(static_cast<int>(bags.size()), tree_edges);
    out.decomposition.bags = std::move(bags);
    out.decomposition.width = 3;
    return out;
}

GeneratedDecomposedGraph random_simple_ktree(int k, int n, std::uint64_t seed) {
    if (k < 1 || n < k + 1)
        throw input_error("simple k-tree needs k >= 1 and n >= k + 1");
    GeneratedDecomposedGraph out;
    out.graph = Graph(n);
    std::vector<std::vector<int>> bags;
    std::vector<Edge> tree_edges;

    std::vector<int> initial(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        initial[static_cast<std::size_t>(i)] = i;
        for (int j = i + 1; j <= k; ++j) out.graph.add_edge(i, j);
    }
    bags.push_back(initial);

    // Extendable k-cliques, each usable once, with the bag that created them.
    struct Slot {
        std::vector<int> clique;
        int creator;
    };
    std::vector<Slot> available;
    for (int skip = 0; skip <= k; ++skip) {
        Slot s;
        s.creator = 0;
        for (int i = 0; i <= k; ++i)
            if (i != skip)
                s.clique.push_back(i);
        available.push_back(std::move(s));
    }

    Rng rng(seed);
    for (int v = k + 1; v < n; ++v) {
        std::size_t pick = rng.next_below(available.size());
        Slot slot = std::move(available[pick]);
        available[pick] = std::move(available.back());
        available.pop_back();
        for (int u : slot.clique) out.graph.add_edge(u, v);
        int bag = static_cast<int>(bags.size());
        std::vector<int> bag_verts(slot.clique);
        bag_verts.push_back(v);
        std::sort(bag_verts.begin(), bag_verts.end());
        bags.push_back(std::move(bag_verts));
        tree_edges.emplace_back(bag, slot.creator);
        for (int skip = 0; skip < k; ++skip) {
            Slot s;
            s.creator = bag;
            for (int i = 0; i < k; ++i)
                if (i != skip)
                    s.clique.push_back(slot.clique[static_cast<std::size_t>(i)]);
            s.clique.push_back(v);
            std::sort(s.clique.begin(), s.clique.end());
            available.push_back(std::move(s));
        }
    }
    out.decomposition.tree = Graph::from_edges(static_cast<int>(bags.size()), tree_edges);
    out.decomposition.bags = std::move(bags);
    out.decomposition.width = k;
    return out;
}

Graph random_bounded_degree(int n, int delta, long long m, std::uint64_t seed) {
    if (n < 0 || delta < 0 || m < 0)
        throw input_error("invalid bounded-degree parameters");
    if (2 * m > static_cast<long long>(n) * delta)
        throw input_error("too many edges for the degree bound");
    Graph g(n);
    Rng rng(seed);
    long long budget = 200 * m + 10000;
    long long placed = 0;
    while (placed < m) {
        if (budget-- <= 0)
            throw resource_error("could not place the requested edges within the proposal budget");
        int u = rng.next_int(n);
        int v = rng.next_int(n);
        if (u == v || g.has_edge(u, v) || g.degree(u) >= delta || g.degree(v) >= delta)
            continue;
        g.add_edge(u, v);
        ++placed;
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw input_error("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw input_error("grid needs positive dimensions");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

ProductInstance synth_product_instance(const Graph& h, int layers, int blowup,
                                       std::uint64_t seed) {
    if (h.vertex_count() < 1)
        throw input_error("host graph must be non-empty");
    if (layers < 1 || blowup < 1 || blowup > 3)
        throw input_error("need layers >= 1 and blowup in 1..3");
    const int hn = h.vertex_count();
    Rng rng(seed);

    // Copy counts per (class, layer); every class gets at least one copy.
    std::vector<std::vector<int>> count(static_cast<std::size_t>(hn),
                                        std::vector<int>(static_cast<std::size_t>(layers), 0));
    for (int x = 0; x < hn; ++x) {
        int total = 0;
        for (int i = 0; i < layers; ++i) {
            count[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] =
                rng.next_int(blowup + 1);
            total += count[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
        }
        if (total == 0)
            count[static_cast<std::size_t>(x)][static_cast<std::size_t>(rng.next_int(layers))] =
                1 + rng.next_int(blowup);
    }

    // Class-major vertex numbering: (class, layer, copy) ascending.
    std::vector<std::vector<int>> base(static_cast<std::size_t>(hn),
                                       std::vector<int>(static_cast<std::size_t>(layers), -1));
    int n = 0;
    for (int x = 0; x < hn; ++x)
        for (int i = 0; i < layers; ++i) {
            base[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] = n;
            n += count[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
        }

    ProductInstance out;
    out.graph = Graph(n);
    out.layering.layer_of.assign(static_cast<std::size_t>(n), 0);
    out.partition.class_of.assign(static_cast<std::size_t>(n), 0);
    out.partition.class_count = hn;
    for (int x = 0; x < hn; ++x)
        for (int i = 0; i < layers; ++i)
            for (int c = 0; c < count[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]; ++c) {
                int v = base[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] + c;
                out.layering.layer_of[static_cast<std::size_t>(v)] = i;
                out.partition.class_of[static_cast<std::size_t>(v)] = x;
                out.layering.layer_count = std::max(out.layering.layer_count, i + 1);
            }

    auto copies_of = [&](int x, int i) {
        std::vector<int> vs;
        if (i < 0 || i >= layers)
            return vs;
        int b = base[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
        for (int c = 0; c < count[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]; ++c)
            vs.push_back(b + c);
        return vs;
    };

    // Intra-class edges, wherever the layering permits.
    for (int x = 0; x < hn; ++x)
        for (int i = 0; i < layers; ++i)
            for (int d = 0; d <= 1; ++d) {
                auto us = copies_of(x, i);
                auto ws = copies_of(x, i + d);
                for (int u : us)
                    for (int w : ws)
                        if (u < w && rng.chance(1, 4))
                            out.graph.add_edge(u, w);
            }

    // Cross edges per host edge; force one when none was drawn.
    for (auto [x, y] : h.edges()) {
        std::vector<Edge> candidates;
        for (int i = 0; i < layers; ++i)
            for (int d = -1; d <= 1; ++d)
                for (int u : copies_of(x, i))
                    for (int w : copies_of(y, i + d)) candidates.emplace_back(u, w);
        bool any = false;
        for (auto [u, w] : candidates)
            if (rng.chance(1, 4)) {
                out.graph.add_edge(u, w);
                any = true;
            }
        if (!any && !candidates.empty()) {
            auto [u, w] = candidates[rng.next_below(candidates.size())];
            out.graph.add_edge(u, w);
        }
    }
    return out;
}

}  // namespace pcc
