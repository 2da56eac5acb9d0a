#include "pcc/graph.hpp"

#include <algorithm>
#include <string>

namespace pcc {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0)
        throw input_error("vertex count must be non-negative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw input_error("duplicate edge in edge list");
    }
    g.edge_count_ = edges.size();
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw input_error("edge endpoint out of range");
    if (u == v)
        throw input_error("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return connected_components(g, all);
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   std::span<const int> restrict_to) {
    const int n = g.vertex_count();
    std::vector<char> allowed(static_cast<std::size_t>(n), 0);
    for (int v : restrict_to) {
        if (v < 0 || v >= n)
            throw input_error("restriction vertex out of range");
        allowed[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (!allowed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (allowed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices,
                       std::vector<int>* index_of) {
    std::vector<int> idx(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw input_error("induced subgraph vertex out of range");
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw input_error("induced subgraph vertices must be sorted and distinct");
        idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.neighbors(vertices[i])) {
            int j = idx[static_cast<std::size_t>(w)];
            if (j >= 0 && static_cast<int>(i) < j)
                sub.add_edge(static_cast<int>(i), j);
        }
    }
    if (index_of)
        *index_of = std::move(idx);
    return sub;
}

}  // namespace pcc
