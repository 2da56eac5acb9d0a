#include "pcc/stw_color.hpp"

#include <algorithm>
#include <string>

#include "pcc/chordal.hpp"
#include "pcc/common.hpp"
#include "pcc/outerplanar.hpp"

namespace pcc {

Graph chordal_completion(const Graph& g, const SimpleTreeDecomposition& dec) {
    if (!validate_decomposition(g, dec, true))
        throw input_error("invalid or non-simple tree decomposition");
    Graph gp = g;
    for (const auto& bag : dec.bags)
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j) gp.add_edge(bag[i], bag[j]);
    if (!is_chordal(gp).chordal)
        throw internal_error("bag-clique completion is not chordal");
    return gp;
}

long long stw_palette_bound(int k, int p) {
    if (k < 1 || p < 1)
        throw input_error("k and p must be at least 1");
    if (k == 1)
        return p + 1;
    long long bound = outerplanar_palette_bound(p);
    for (int i = 2; i < k; ++i) bound *= p + 1;
    return bound;
}

ColorAssignment color_simple_treewidth(const Graph& g, const SimpleTreeDecomposition& dec, int p,
                                       const std::map<int, SimpleTreeDecomposition>* layer_decs) {
    if (p < 1)
        throw input_error("p must be at least 1");
    if (!validate_decomposition(g, dec, true))
        throw input_error("invalid or non-simple tree decomposition");
    const int k = std::max(dec.width, 1);
    const int n = g.vertex_count();

    if (k == 1) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 2)
                throw input_error("width-1 simple decomposition but a vertex has degree > 2");
        Layering lay = bfs_layering(g);
        ColorAssignment col(n, {p + 1, 1});
        for (int v = 0; v < n; ++v)
            col.set(v, 0, lay.layer_of[static_cast<std::size_t>(v)] % (p + 1));
        return col;
    }

    if (k == 2)
        return color_outerplanar(g, p);

    if (k > 4 || (k == 4 && layer_decs == nullptr))
        throw input_error("simple treewidth " + std::to_string(k) +
                          " needs per-layer decompositions of width at most 3" +
                          (k > 4 ? ", which would require nested inputs; not supported" : ""));

    Graph gp = chordal_completion(g, dec);
    Layering lay = bfs_layering(gp);
    std::vector<std::vector<int>> layer_vertices(static_cast<std::size_t>(lay.layer_count));
    for (int v = 0; v < n; ++v)
        layer_vertices[static_cast<std::size_t>(lay.layer_of[static_cast<std::size_t>(v)])]
            .push_back(v);

    // One shared per-layer palette: all layers color into 0..B-1.
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    long long shared_palette = 1;
    for (int L = 0; L < lay.layer_count; ++L) {
        const auto& verts = layer_vertices[static_cast<std::size_t>(L)];
        if (verts.empty())
            continue;
        Graph sub = induced_subgraph(gp, verts);
        ColorAssignment sub_col(0, {1});
        if (layer_decs != nullptr && k == 4) {
            auto it = layer_decs->find(L);
            if (it == layer_decs->end())
                throw input_error("missing decomposition for layer " + std::to_string(L));
            if (it->second.width > 3)
                throw input_error("layer decomposition wider than 3 for layer " +
                                  std::to_string(L));
            sub_col = color_simple_treewidth(sub, it->second, p, nullptr);
        } else {
            try {
                sub_col = color_outerplanar(sub, p);
            } catch (const input_error& e) {
                throw input_error(std::string("layer ") + std::to_string(L) +
                                  " of the chordal completion is not outerplanar; the "
                                  "decomposition is not simple of width 3 (" +
                                  e.what() + ")");
            }
        }
        shared_palette = std::max(shared_palette, sub_col.palette_size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            beta[static_cast<std::size_t>(verts[i])] =
                static_cast<int>(sub_col.flat(static_cast<int>(i)));
    }

    ColorAssignment col(n, {p + 1, static_cast<int>(shared_palette)});
    for (int v = 0; v < n; ++v) {
        col.set(v, 0, lay.layer_of[static_cast<std::size_t>(v)] % (p + 1));
        col.set(v, 1, beta[static_cast<std::size_t>(v)]);
    }
    return col;
}

}  // namespace pcc
