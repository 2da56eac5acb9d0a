#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/common.hpp"
#include "pcc/graph.hpp"

namespace pcc {

inline constexpr int kUncolored = -1;

enum class ViolationKind { centered, linear };

/// A connected, fully colored subgraph using at most p colors with no color
/// occurring exactly once. For kind linear the vertices are in path order.
struct Violation {
    std::vector<int> vertices;
    std::vector<int> colors;  // distinct colors on the set, sorted
    ViolationKind kind = ViolationKind::centered;
};

enum class VerifyMode { subsets, growth };

struct VerifyResult {
    bool ok = true;
    std::optional<Violation> violation;
};

/// True iff every connected subgraph either sees more than p colors or has a
/// color appearing exactly once. Subsets mode enumerates color subsets of
/// size <= p; growth mode runs an anchored component-growing search from each
/// vertex. Both modes return identical verdicts.
VerifyResult is_p_centered(const Graph& g, std::span<const int> colors, int p,
                           VerifyMode mode = VerifyMode::growth);
VerifyResult is_p_centered(const Graph& g, const ColorAssignment& col, int p,
                           VerifyMode mode = VerifyMode::growth);

/// The same condition restricted to simple paths. A path using more than p
/// colors always satisfies it (the condition is read with the path bound p).
/// Path enumeration is exponential; graphs above `vertex_cap` are rejected
/// with a resource error.
VerifyResult is_p_linear(const Graph& g, std::span<const int> colors, int p,
                         int vertex_cap = kDefaultLinearVertexCap);
VerifyResult is_p_linear(const Graph& g, const ColorAssignment& col, int p,
                         int vertex_cap = kDefaultLinearVertexCap);

/// Anchored search for a violator containing v in a partial coloring
/// (kUncolored entries are excluded from all subgraphs). v must be colored.
std::optional<Violation> find_violator_containing(const Graph& g, std::span<const int> colors,
                                                  int p, int v);

/// Anchored search for a violating simple path through v (partial colorings
/// allowed; uncolored vertices are skipped).
std::optional<Violation> find_path_violator_through(const Graph& g, std::span<const int> colors,
                                                    int p, int v);

/// True iff there is any violator among the colored vertices.
bool has_any_violator(const Graph& g, std::span<const int> colors, int p);

/// Independent re-check of a reported violation against its type invariants.
bool violation_is_valid(const Graph& g, std::span<const int> colors, int p, const Violation& viol);

}  // namespace pcc
