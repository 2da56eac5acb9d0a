#include "pcc/oracle.hpp"

#include <string>
#include <vector>

#include "pcc/verifier.hpp"

namespace pcc {

namespace {

class ExactSearch {
public:
    ExactSearch(const Graph& g, int p, bool linear, const Deadline& deadline)
        : g_(g), p_(p), linear_(linear), deadline_(deadline) {}

    std::optional<std::vector<int>> solve(int max_colors) {
        const int n = g_.vertex_count();
        for (int k = 1; k <= max_colors; ++k) {
            colors_.assign(static_cast<std::size_t>(n), kUncolored);
            k_ = k;
            if (assign(0, -1))
                return colors_;
            // k colors proven insufficient; remember for budget reporting.
            proven_lower_ = k + 1;
        }
        return std::nullopt;
    }

private:
    bool assign(int v, int max_used) {
        if (v == g_.vertex_count())
            return true;
        if ((++nodes_ & 0x3F) == 0 && deadline_.expired())
            throw resource_error("exact search time budget exhausted; proven lower bound " +
                                 std::to_string(proven_lower_));
        // Symmetry breaking: vertex v may use at most one color beyond those
        // already in use.
        int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            colors_[static_cast<std::size_t>(v)] = c;
            bool clash = linear_ ? find_path_violator_through(g_, colors_, p_, v).has_value()
                                 : find_violator_containing(g_, colors_, p_, v).has_value();
            if (!clash && assign(v + 1, std::max(max_used, c)))
                return true;
        }
        colors_[static_cast<std::size_t>(v)] = kUncolored;
        return false;
    }

    const Graph& g_;
    int p_;
    bool linear_;
    Deadline deadline_;
    int k_ = 0;
    int proven_lower_ = 1;
    long long nodes_ = 0;
    std::vector<int> colors_;
};

OracleOutcome run_exact(const Graph& g, int p, const OracleOptions& opts, bool linear) {
    if (p < 1)
        throw input_error("p must be at least 1");
    if (opts.max_colors < 1)
        throw input_error("max_colors must be at least 1");
    OracleOutcome out;
    if (g.vertex_count() == 0) {
        out.value = 0;
        if (opts.want_witness)
            out.witness = ColorAssignment(0, {1});
        return out;
    }
    ExactSearch search(g, p, linear, opts.deadline);
    auto colors = search.solve(opts.max_colors);
    if (!colors)
        return out;
    int used = 0;
    for (int c : *colors) used = std::max(used, c + 1);
    out.value = used;
    if (opts.want_witness)
        out.witness = ColorAssignment::from_flat(std::move(*colors), used);
    return out;
}

}  // namespace

OracleOutcome chi_p_exact(const Graph& g, int p, const OracleOptions& opts) {
    return run_exact(g, p, opts, false);
}

OracleOutcome lin_p_exact(const Graph& g, int p, const OracleOptions& opts) {
    return run_exact(g, p, opts, true);
}

}  // namespace pcc
