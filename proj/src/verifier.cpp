#include "pcc/verifier.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

namespace pcc {

namespace {

// Colors are remapped to dense ids 0..used-1 (sorted by original value) so
// that per-color arrays stay small regardless of the declared palette.
struct DenseColors {
    std::vector<int> of;        // per vertex, kUncolored kept
    std::vector<int> original;  // dense id -> original color
    int used = 0;
};

DenseColors densify(std::span<const int> colors) {
    DenseColors d;
    d.original.reserve(colors.size());
    for (int c : colors)
        if (c >= 0)
            d.original.push_back(c);
        else if (c != kUncolored)
            throw input_error("negative color value");
    std::sort(d.original.begin(), d.original.end());
    d.original.erase(std::unique(d.original.begin(), d.original.end()), d.original.end());
    d.used = static_cast<int>(d.original.size());
    d.of.assign(colors.size(), kUncolored);
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] >= 0)
            d.of[v] = static_cast<int>(std::lower_bound(d.original.begin(), d.original.end(),
                                                        colors[v]) -
                                       d.original.begin());
    return d;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

Violation make_centered_violation(std::vector<int> comp, const std::vector<int>& dense_colors,
                                  const DenseColors& d) {
    Violation viol;
    std::sort(comp.begin(), comp.end());
    viol.vertices = std::move(comp);
    viol.colors.reserve(dense_colors.size());
    for (int c : dense_colors) viol.colors.push_back(d.original[static_cast<std::size_t>(c)]);
    std::sort(viol.colors.begin(), viol.colors.end());
    viol.kind = ViolationKind::centered;
    return viol;
}

// Anchored growth over color sets. States are color sets S containing the
// anchor's color; the component of the anchor among vertices >= lo colored
// within S determines everything else. remaining[c] counts occurrences of c
// among colored vertices with index >= lo; a branch whose component holds a
// unique color with remaining count 1 can never become a violator, because
// every deeper component contains this one.
class GrowthSearch {
public:
    GrowthSearch(const Graph& g, const std::vector<int>& dense, int used, int p, int lo,
                 const std::vector<int>& remaining)
        : g_(g), color_(dense), p_(p), lo_(lo), remaining_(remaining),
          in_set_(static_cast<std::size_t>(used), 0),
          in_comp_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    std::optional<Violation> run(int anchor, const DenseColors& d) {
        anchor_ = anchor;
        visited_.clear();
        std::vector<int> s{color_[static_cast<std::size_t>(anchor)]};
        std::optional<Violation> found;
        dfs(s, found, d);
        return found;
    }

private:
    bool dfs(std::vector<int>& s, std::optional<Violation>& found, const DenseColors& d) {
        if (!visited_.insert(s).second)
            return false;

        for (int c : s) in_set_[static_cast<std::size_t>(c)] = 1;
        std::vector<int> comp = component(s);
        // Occurrence counts per color of the component.
        count_.assign(s.size(), 0);
        for (int u : comp) {
            int c = color_[static_cast<std::size_t>(u)];
            std::size_t k = static_cast<std::size_t>(
                std::lower_bound(s.begin(), s.end(), c) - s.begin());
            ++count_[k];
        }
        bool any_unique = false;
        bool dead = false;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (count_[k] == 1) {
                any_unique = true;
                if (remaining_[static_cast<std::size_t>(s[k])] == 1)
                    dead = true;  // this color stays unique in every superset
            }
        }
        if (!any_unique) {
            found = make_centered_violation(std::move(comp), s, d);
            clear_marks(s);
            return true;
        }
        if (dead || static_cast<int>(s.size()) == p_) {
            clear_marks(s);
            return false;
        }

        // Colors adjacent to the component, ascending.
        std::vector<int> adjacent;
        for (int u : comp) {
            for (int w : g_.neighbors(u)) {
                int c = w >= lo_ ? color_[static_cast<std::size_t>(w)] : kUncolored;
                if (c >= 0 && !in_set_[static_cast<std::size_t>(c)]) {
                    in_set_[static_cast<std::size_t>(c)] = 2;  // mark candidate
                    adjacent.push_back(c);
                }
            }
        }
        for (int c : adjacent) in_set_[static_cast<std::size_t>(c)] = 0;
        std::sort(adjacent.begin(), adjacent.end());
        clear_marks(s);

        for (int c : adjacent) {
            std::vector<int> next(s);
            next.insert(std::lower_bound(next.begin(), next.end(), c), c);
            if (dfs(next, found, d))
                return true;
        }
        return false;
    }

    std::vector<int> component(const std::vector<int>&) {
        std::vector<int> comp;
        comp.push_back(anchor_);
        in_comp_[static_cast<std::size_t>(anchor_)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (int w : g_.neighbors(comp[head])) {
                if (w < lo_ || in_comp_[static_cast<std::size_t>(w)])
                    continue;
                int c = color_[static_cast<std::size_t>(w)];
                if (c >= 0 && in_set_[static_cast<std::size_t>(c)] == 1) {
                    in_comp_[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        for (int u : comp) in_comp_[static_cast<std::size_t>(u)] = 0;
        return comp;
    }

    void clear_marks(const std::vector<int>& s) {
        for (int c : s) in_set_[static_cast<std::size_t>(c)] = 0;
    }

    const Graph& g_;
    const std::vector<int>& color_;
    int p_;
    int lo_;
    const std::vector<int>& remaining_;
    int anchor_ = 0;
    std::vector<char> in_set_;
    std::vector<char> in_comp_;
    std::vector<int> count_;
    std::unordered_set<std::vector<int>, VecHash> visited_;
};

void require_covering(std::span<const int> colors, int p) {
    if (p < 1)
        throw input_error("p must be at least 1");
    for (int c : colors)
        if (c < 0)
            throw input_error("coloring does not cover all vertices");
}

VerifyResult centered_subsets(const Graph& g, std::span<const int> colors, int p) {
    const int n = g.vertex_count();
    DenseColors d = densify(colors);
    const int u = d.used;
    const int limit = std::min(p, u);

    std::vector<char> in_set(static_cast<std::size_t>(u), 0);
    std::vector<int> count(static_cast<std::size_t>(u), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> comp;

    // Size-s color subsets in lexicographic order of dense (= sorted original)
    // ids; the first failing component in min-vertex order is returned.
    for (int s = 1; s <= limit; ++s) {
        std::vector<int> combo(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) combo[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int c : combo) in_set[static_cast<std::size_t>(c)] = 1;
            std::fill(seen.begin(), seen.end(), 0);
            std::optional<Violation> found;
            for (int start = 0; start < n && !found; ++start) {
                if (seen[static_cast<std::size_t>(start)] ||
                    !in_set[static_cast<std::size_t>(d.of[static_cast<std::size_t>(start)])])
                    continue;
                comp.clear();
                comp.push_back(start);
                seen[static_cast<std::size_t>(start)] = 1;
                for (std::size_t head = 0; head < comp.size(); ++head) {
                    for (int w : g.neighbors(comp[head])) {
                        if (!seen[static_cast<std::size_t>(w)] &&
                            in_set[static_cast<std::size_t>(d.of[static_cast<std::size_t>(w)])]) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            comp.push_back(w);
                        }
                    }
                }
                std::vector<int> present;
                for (int v : comp) {
                    int c = d.of[static_cast<std::size_t>(v)];
                    if (count[static_cast<std::size_t>(c)]++ == 0)
                        present.push_back(c);
                }
                bool any_unique = false;
                for (int c : present)
                    if (count[static_cast<std::size_t>(c)] == 1)
                        any_unique = true;
                for (int c : present) count[static_cast<std::size_t>(c)] = 0;
                if (!any_unique) {
                    std::sort(present.begin(), present.end());
                    found = make_centered_violation(std::move(comp), present, d);
                }
            }
            for (int c : combo) in_set[static_cast<std::size_t>(c)] = 0;
            if (found)
                return {false, std::move(found)};

            // Next combination.
            int i = s - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == u - s + i) --i;
            if (i < 0)
                break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {true, std::nullopt};
}

VerifyResult centered_growth(const Graph& g, std::span<const int> colors, int p) {
    DenseColors d = densify(colors);
    std::vector<int> remaining(static_cast<std::size_t>(d.used), 0);
    for (int c : d.of)
        if (c >= 0)
            ++remaining[static_cast<std::size_t>(c)];

    // Every violator is found at its minimum vertex: anchor v only searches
    // the subgraph induced by vertices >= v.
    for (int v = 0; v < g.vertex_count(); ++v) {
        GrowthSearch search(g, d.of, d.used, p, v, remaining);
        if (auto viol = search.run(v, d))
            return {false, std::move(viol)};
        --remaining[static_cast<std::size_t>(d.of[static_cast<std::size_t>(v)])];
    }
    return {true, std::nullopt};
}

}  // namespace

VerifyResult is_p_centered(const Graph& g, std::span<const int> colors, int p, VerifyMode mode) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw input_error("coloring size does not match graph");
    require_covering(colors, p);
    return mode == VerifyMode::subsets ? centered_subsets(g, colors, p)
                                       : centered_growth(g, colors, p);
}

VerifyResult is_p_centered(const Graph& g, const ColorAssignment& col, int p, VerifyMode mode) {
    auto flat = col.flat_all();
    return is_p_centered(g, flat, p, mode);
}

std::optional<Violation> find_violator_containing(const Graph& g, std::span<const int> colors,
                                                  int p, int v) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw input_error("coloring size does not match graph");
    if (p < 1)
        throw input_error("p must be at least 1");
    if (v < 0 || v >= g.vertex_count())
        throw input_error("anchor vertex out of range");
    if (colors[static_cast<std::size_t>(v)] < 0)
        throw input_error("anchor vertex is uncolored");
    DenseColors d = densify(colors);
    std::vector<int> remaining(static_cast<std::size_t>(d.used), 0);
    for (int c : d.of)
        if (c >= 0)
            ++remaining[static_cast<std::size_t>(c)];
    GrowthSearch search(g, d.of, d.used, p, 0, remaining);
    return search.run(v, d);
}

bool has_any_violator(const Graph& g, std::span<const int> colors, int p) {
    DenseColors d = densify(colors);
    std::vector<int> remaining(static_cast<std::size_t>(d.used), 0);
    for (int c : d.of)
        if (c >= 0)
            ++remaining[static_cast<std::size_t>(c)];
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = d.of[static_cast<std::size_t>(v)];
        if (c < 0)
            continue;
        GrowthSearch search(g, d.of, d.used, p, v, remaining);
        if (search.run(v, d))
            return true;
        --remaining[static_cast<std::size_t>(c)];
    }
    return false;
}

namespace {

struct LinearSearch {
    const Graph& g;
    const std::vector<int>& color;  // dense, kUncolored skipped
    const DenseColors& d;
    int p;

    std::vector<char> used;
    std::vector<int> count;
    int distinct = 0;
    int uniques = 0;
    std::vector<int> arm_a, arm_b;
    int center = -1;

    LinearSearch(const Graph& g_, const std::vector<int>& dense, const DenseColors& d_, int p_)
        : g(g_), color(dense), d(d_), p(p_),
          used(static_cast<std::size_t>(g_.vertex_count()), 0),
          count(static_cast<std::size_t>(d_.used), 0) {}

    void push(int v) {
        used[static_cast<std::size_t>(v)] = 1;
        int c = color[static_cast<std::size_t>(v)];
        int& k = count[static_cast<std::size_t>(c)];
        if (k == 0) {
            ++distinct;
            ++uniques;
        } else if (k == 1) {
            --uniques;
        }
        ++k;
    }

    void pop(int v) {
        used[static_cast<std::size_t>(v)] = 0;
        int c = color[static_cast<std::size_t>(v)];
        int& k = count[static_cast<std::size_t>(c)];
        --k;
        if (k == 0) {
            --distinct;
            --uniques;
        } else if (k == 1) {
            ++uniques;
        }
    }

    Violation make_violation() const {
        Violation viol;
        viol.kind = ViolationKind::linear;
        viol.vertices.assign(arm_a.rbegin(), arm_a.rend());
        viol.vertices.push_back(center);
        viol.vertices.insert(viol.vertices.end(), arm_b.begin(), arm_b.end());
        for (int v : viol.vertices) viol.colors.push_back(d.original[static_cast<std::size_t>(
            color[static_cast<std::size_t>(v)])]);
        std::sort(viol.colors.begin(), viol.colors.end());
        viol.colors.erase(std::unique(viol.colors.begin(), viol.colors.end()), viol.colors.end());
        return viol;
    }

    // Grows arm B from `last` (the center when the arm is empty).
    bool grow_b(int last, std::optional<Violation>& found) {
        for (int w : g.neighbors(last)) {
            if (used[static_cast<std::size_t>(w)] || color[static_cast<std::size_t>(w)] < 0)
                continue;
            push(w);
            arm_b.push_back(w);
            if (distinct <= p) {
                if (uniques == 0) {
                    found = make_violation();
                    arm_b.pop_back();
                    pop(w);
                    return true;
                }
                if (grow_b(w, found)) {
                    arm_b.pop_back();
                    pop(w);
                    return true;
                }
            }
            arm_b.pop_back();
            pop(w);
        }
        return false;
    }

    // Grows arm A; every A-state also enumerates all B arms.
    bool grow_a(int last, std::optional<Violation>& found) {
        if (grow_b(center, found))
            return true;
        for (int w : g.neighbors(last)) {
            if (used[static_cast<std::size_t>(w)] || color[static_cast<std::size_t>(w)] < 0)
                continue;
            push(w);
            arm_a.push_back(w);
            if (distinct <= p) {
                if (uniques == 0) {
                    found = make_violation();
                    arm_a.pop_back();
                    pop(w);
                    return true;
                }
                if (grow_a(w, found)) {
                    arm_a.pop_back();
                    pop(w);
                    return true;
                }
            }
            arm_a.pop_back();
            pop(w);
        }
        return false;
    }

    std::optional<Violation> through(int v) {
        center = v;
        push(v);
        std::optional<Violation> found;
        grow_a(v, found);
        pop(v);
        return found;
    }
};

}  // namespace

VerifyResult is_p_linear(const Graph& g, std::span<const int> colors, int p, int vertex_cap) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw input_error("coloring size does not match graph");
    require_covering(colors, p);
    if (g.vertex_count() > vertex_cap)
        throw resource_error("graph has " + std::to_string(g.vertex_count()) +
                             " vertices, above the simple-path enumeration cap of " +
                             std::to_string(vertex_cap));
    DenseColors d = densify(colors);
    LinearSearch search(g, d.of, d, p);
    // Enumerate paths from every start vertex, one growth direction: arm B
    // only. Every path appears with its first vertex as the start.
    for (int v = 0; v < g.vertex_count(); ++v) {
        search.center = v;
        search.push(v);
        std::optional<Violation> found;
        search.grow_b(v, found);
        search.pop(v);
        if (found)
            return {false, std::move(found)};
    }
    return {true, std::nullopt};
}

VerifyResult is_p_linear(const Graph& g, const ColorAssignment& col, int p, int vertex_cap) {
    auto flat = col.flat_all();
    return is_p_linear(g, flat, p, vertex_cap);
}

std::optional<Violation> find_path_violator_through(const Graph& g, std::span<const int> colors,
                                                    int p, int v) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw input_error("coloring size does not match graph");
    if (p < 1)
        throw input_error("p must be at least 1");
    if (v < 0 || v >= g.vertex_count() || colors[static_cast<std::size_t>(v)] < 0)
        throw input_error("anchor vertex must be a colored vertex");
    DenseColors d = densify(colors);
    LinearSearch search(g, d.of, d, p);
    return search.through(v);
}

bool violation_is_valid(const Graph& g, std::span<const int> colors, int p, const Violation& viol) {
    const auto& vs = viol.vertices;
    if (vs.empty())
        return false;
    std::vector<int> sorted_vs(vs);
    std::sort(sorted_vs.begin(), sorted_vs.end());
    if (std::adjacent_find(sorted_vs.begin(), sorted_vs.end()) != sorted_vs.end())
        return false;
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count() || colors[static_cast<std::size_t>(v)] < 0)
            return false;

    if (viol.kind == ViolationKind::linear) {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (!g.has_edge(vs[i], vs[i + 1]))
                return false;
    } else {
        if (connected_components(g, sorted_vs).size() != 1)
            return false;
    }

    std::vector<int> present;
    for (int v : vs) present.push_back(colors[static_cast<std::size_t>(v)]);
    std::sort(present.begin(), present.end());
    std::vector<int> distinct(present);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) > p)
        return false;
    if (distinct != viol.colors)
        return false;
    for (int c : distinct) {
        auto lo = std::lower_bound(present.begin(), present.end(), c);
        auto hi = std::upper_bound(present.begin(), present.end(), c);
        if (hi - lo == 1)
            return false;  // unique color present
    }
    return true;
}

}  // namespace pcc
