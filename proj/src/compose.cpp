#include "pcc/compose.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "pcc/verifier.hpp"

namespace pcc {

ColorAssignment compose_planar(const Graph& g, const Layering& lay, const VertexPartition& part,
                               const ColorAssignment& psi, int p, bool verify_quotient) {
    const int n = g.vertex_count();
    if (p < 1)
        throw input_error("p must be at least 1");
    if (!validate_layering(g, lay))
        throw input_error("invalid layering");
    if (!validate_partition(g, part))
        throw input_error("invalid partition");
    if (psi.n() != part.class_count)
        throw input_error("quotient coloring covers " + std::to_string(psi.n()) +
                          " classes, expected " + std::to_string(part.class_count));
    if (auto bad = find_layered_width_violation(g, lay, part, 3))
        throw input_error("partition has layered width > 3 at class " +
                          std::to_string(bad->first) + ", layer " + std::to_string(bad->second));
    if (verify_quotient) {
        Graph q = quotient(g, part);
        if (!is_p_centered(q, psi, p).ok)
            throw input_error("quotient coloring is not p-centered");
    }
    if (psi.palette_size() > std::numeric_limits<int>::max())
        throw input_error("quotient palette too large");

    ColorAssignment col(n, {p + 1, static_cast<int>(psi.palette_size()), 3});
    std::map<std::pair<int, int>, int> rank;  // (class, layer) -> next free rank
    for (int v = 0; v < n; ++v) {
        int layer = lay.layer_of[static_cast<std::size_t>(v)];
        int cls = part.class_of[static_cast<std::size_t>(v)];
        col.set(v, 0, layer % (p + 1));
        col.set(v, 1, static_cast<int>(psi.flat(cls)));
        col.set(v, 2, rank[{cls, layer}]++);
    }
    return col;
}

ColorAssignment compose_genus(const Graph& g, const Layering& lay, const GenusComposeInputs& in,
                              int p) {
    const int n = g.vertex_count();
    if (p < 1)
        throw input_error("p must be at least 1");
    if (in.genus < 0)
        throw input_error("genus must be non-negative");
    if (!validate_layering(g, lay))
        throw input_error("invalid layering");

    std::vector<char> in_z(static_cast<std::size_t>(n), 0);
    for (int v : in.z_set) {
        if (v < 0 || v >= n)
            throw input_error("apex vertex out of range");
        if (in_z[static_cast<std::size_t>(v)])
            throw input_error("duplicate apex vertex");
        in_z[static_cast<std::size_t>(v)] = 1;
    }

    // |V_i intersect Z| <= 2 genus.
    std::map<int, int> z_in_layer;
    for (int v : in.z_set)
        if (++z_in_layer[lay.layer_of[static_cast<std::size_t>(v)]] > 2 * in.genus)
            throw input_error("layer " +
                              std::to_string(lay.layer_of[static_cast<std::size_t>(v)]) +
                              " contains more than 2*genus apex vertices");

    // Canonical correspondence of V(g) - Z with a prefix of gplus.
    std::vector<int> to_plus(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!in_z[static_cast<std::size_t>(v)])
            to_plus[static_cast<std::size_t>(v)] = next++;
    if (in.gplus.vertex_count() < next)
        throw input_error("gplus has fewer vertices than V(g) - Z");
    if (static_cast<int>(in.w_layering.layer_of.size()) != in.gplus.vertex_count() ||
        !validate_layering(in.gplus, in.w_layering))
        throw input_error("invalid layering of gplus");
    if (in.gplus_coloring.n() != in.gplus.vertex_count())
        throw input_error("gplus coloring does not cover gplus");

    for (auto [u, v] : g.edges()) {
        if (in_z[static_cast<std::size_t>(u)] || in_z[static_cast<std::size_t>(v)])
            continue;
        if (!in.gplus.has_edge(to_plus[static_cast<std::size_t>(u)],
                               to_plus[static_cast<std::size_t>(v)]))
            throw input_error("gplus is missing an edge of g - Z");
    }
    for (int v = 0; v < n; ++v) {
        if (in_z[static_cast<std::size_t>(v)])
            continue;
        int u = to_plus[static_cast<std::size_t>(v)];
        if (in.w_layering.layer_of[static_cast<std::size_t>(u)] !=
            lay.layer_of[static_cast<std::size_t>(v)])
            throw input_error("w-layering disagrees with g's layering on vertex " +
                              std::to_string(v));
    }
    // The composition is p-centered only when the reused coloring exposes the
    // layer index in its first coordinate.
    for (int u = 0; u < in.gplus.vertex_count(); ++u)
        if (in.gplus_coloring.get(u, 0) !=
            in.w_layering.layer_of[static_cast<std::size_t>(u)] % (p + 1))
            throw input_error(
                "gplus coloring coordinate 0 must be the layer index mod (p+1); compose the "
                "planar side first");

    // Flatten the remaining coordinates of the gplus coloring into one payload
    // coordinate.
    long long rest = 1;
    for (int k = 1; k < in.gplus_coloring.coords(); ++k) rest *= in.gplus_coloring.shape()[static_cast<std::size_t>(k)];
    long long payload_bound = std::max<long long>({rest, 2LL * in.genus, 1});
    if (payload_bound > std::numeric_limits<int>::max())
        throw input_error("payload palette too large");

    ColorAssignment col(n, {2, p + 1, static_cast<int>(payload_bound)});
    std::map<int, int> z_rank;
    for (int v = 0; v < n; ++v) {
        int layer = lay.layer_of[static_cast<std::size_t>(v)];
        if (in_z[static_cast<std::size_t>(v)]) {
            col.set(v, 0, 0);
            col.set(v, 1, layer % (p + 1));
            col.set(v, 2, z_rank[layer]++);
        } else {
            int u = to_plus[static_cast<std::size_t>(v)];
            long long flat_rest = 0;
            for (int k = 1; k < in.gplus_coloring.coords(); ++k)
                flat_rest = flat_rest * in.gplus_coloring.shape()[static_cast<std::size_t>(k)] +
                            in.gplus_coloring.get(u, k);
            col.set(v, 0, 1);
            col.set(v, 1, in.gplus_coloring.get(u, 0));
            col.set(v, 2, static_cast<int>(flat_rest));
        }
    }
    return col;
}

}  // namespace pcc
