#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"
#include "pcc/structures.hpp"

namespace pcc {

/// Circular vertex order witnessing outerplanarity: placing the vertices on a
/// circle in this order, no two edges cross.
struct OuterplanarLayout {
    std::vector<int> order;
};

/// Standard interval test: edges (as position pairs) must be nested or
/// disjoint.
bool layout_is_noncrossing(const Graph& g, const OuterplanarLayout& layout);

/// Recovers a witness order, or nullopt when g is not outerplanar. Biconnected
/// blocks are peeled down to their unique Hamiltonian outer cycle and glued at
/// cut vertices; an exhaustive order search backs this up for tiny graphs.
std::optional<OuterplanarLayout> find_outerplanar_layout(const Graph& g);

/// Supergraph on the same vertices that is maximal outerplanar (a 2-tree with
/// Hamiltonian outer cycle equal to the layout order): components are joined
/// along the circle, all outer-cycle edges added, and every internal face
/// triangulated by a fan from its smallest-index vertex.
std::pair<Graph, OuterplanarLayout> complete_to_maximal_outerplanar(
    const Graph& g, const std::optional<OuterplanarLayout>& layout = std::nullopt);

/// Balanced binary tree on labels 1..p arranged in-order; ancestors_of(l)
/// returns the labels on the path from l to the root, l included, and
/// ancestors_of(0) is empty. Height is ceil(log2(p+1)).
class InOrderTree {
public:
    explicit InOrderTree(int p);
    int label_count() const { return p_; }
    int height() const { return height_; }
    const std::vector<int>& ancestors_of(int label) const;

private:
    int p_ = 0;
    int height_ = 0;
    std::vector<std::vector<int>> ancestors_;
};

/// For each connected component of the subgraph above `layer`, the set of
/// layer-i vertices adjacent to it. In a chordal graph every shadow is a
/// clique (checked; gplus is also checked chordal).
struct ShadowEntry {
    std::vector<int> component;  // sorted
    std::vector<int> shadow;     // sorted vertices in the given layer
};
std::vector<ShadowEntry> shadows(const Graph& gplus, const Layering& layering, int layer);

long long outerplanar_palette_bound(int p);  // p ceil(log2(p+1)) + 2p + 1

/// p-centered coloring of an outerplanar graph with at most
/// p ceil(log2(p+1)) + 2p + 1 colors. Components are completed and colored
/// independently from one shared palette.
ColorAssignment color_outerplanar(const Graph& g, int p,
                                  const std::optional<OuterplanarLayout>& layout = std::nullopt);

}  // namespace pcc
