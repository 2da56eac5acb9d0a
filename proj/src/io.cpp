#include "pcc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pcc {

namespace {

long long next_int(std::istream& in, const char* what) {
    long long v;
    if (!(in >> v))
        throw input_error(std::string("expected integer: ") + what);
    return v;
}

int next_int_in(std::istream& in, const char* what, long long lo, long long hi) {
    long long v = next_int(in, what);
    if (v < lo || v > hi)
        throw input_error(std::string(what) + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

void expect_eof(std::istream& in) {
    std::string tail;
    if (in >> tail)
        throw input_error("trailing data after expected end of file: '" + tail + "'");
}

/// Reads n lines "v value" with v = 0..n-1 ascending; n inferred from EOF.
std::vector<int> read_indexed_values(std::istream& in, const char* what) {
    std::vector<int> values;
    long long v;
    while (in >> v) {
        if (v != static_cast<long long>(values.size()))
            throw input_error(std::string(what) + ": expected vertex " +
                              std::to_string(values.size()) + ", got " + std::to_string(v));
        values.push_back(next_int_in(in, what, 0, std::numeric_limits<int>::max()));
    }
    return values;
}

}  // namespace

Graph read_graph(std::istream& in) {
    int n = next_int_in(in, "vertex count", 0, std::numeric_limits<int>::max());
    long long m = next_int(in, "edge count");
    if (m < 0)
        throw input_error("negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = next_int_in(in, "edge endpoint", 0, n - 1);
        int v = next_int_in(in, "edge endpoint", 0, n - 1);
        if (u >= v)
            throw input_error("edges must satisfy u < v, got " + std::to_string(u) + " " +
                              std::to_string(v));
        edges.emplace_back(u, v);
    }
    expect_eof(in);
    return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Layering read_layering(std::istream& in) {
    Layering lay;
    lay.layer_of = read_indexed_values(in, "layering");
    for (int l : lay.layer_of) lay.layer_count = std::max(lay.layer_count, l + 1);
    return lay;
}

void write_layering(std::ostream& out, const Layering& lay) {
    for (std::size_t v = 0; v < lay.layer_of.size(); ++v)
        out << v << ' ' << lay.layer_of[v] << '\n';
}

VertexPartition read_partition(std::istream& in) {
    VertexPartition part;
    part.class_of = read_indexed_values(in, "partition");
    for (int c : part.class_of) part.class_count = std::max(part.class_count, c + 1);
    return part;
}

void write_partition(std::ostream& out, const VertexPartition& part) {
    for (std::size_t v = 0; v < part.class_of.size(); ++v)
        out << v << ' ' << part.class_of[v] << '\n';
}

SimpleTreeDecomposition read_decomposition(std::istream& in) {
    int b = next_int_in(in, "bag count", 1, std::numeric_limits<int>::max());
    SimpleTreeDecomposition dec;
    dec.bags.resize(static_cast<std::size_t>(b));
    int max_bag = 0;
    for (int t = 0; t < b; ++t) {
        int size = next_int_in(in, "bag size", 0, std::numeric_limits<int>::max());
        auto& bag = dec.bags[static_cast<std::size_t>(t)];
        bag.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            bag[static_cast<std::size_t>(i)] =
                next_int_in(in, "bag vertex", 0, std::numeric_limits<int>::max());
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw input_error("bag vertices must be sorted and distinct");
        max_bag = std::max(max_bag, size);
    }
    std::vector<Edge> tree_edges;
    for (int i = 0; i + 1 < b; ++i) {
        int x = next_int_in(in, "tree edge", 0, b - 1);
        int y = next_int_in(in, "tree edge", 0, b - 1);
        tree_edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    expect_eof(in);
    dec.tree = Graph::from_edges(b, tree_edges);
    dec.width = max_bag - 1;
    return dec;
}

void write_decomposition(std::ostream& out, const SimpleTreeDecomposition& dec) {
    out << dec.bags.size() << '\n';
    for (const auto& bag : dec.bags) {
        out << bag.size();
        for (int v : bag) out << ' ' << v;
        out << '\n';
    }
    for (auto [x, y] : dec.tree.edges()) out << x << ' ' << y << '\n';
}

ColorAssignment read_coloring(std::istream& in) {
    int n = next_int_in(in, "vertex count", 0, std::numeric_limits<int>::max());
    int coords = next_int_in(in, "coordinate count", 1, 4);
    std::vector<int> shape(static_cast<std::size_t>(coords));
    for (int k = 0; k < coords; ++k)
        shape[static_cast<std::size_t>(k)] =
            next_int_in(in, "palette bound", 1, std::numeric_limits<int>::max());
    ColorAssignment col(n, shape);
    for (int i = 0; i < n; ++i) {
        int v = next_int_in(in, "vertex", 0, n - 1);
        if (v != i)
            throw input_error("coloring lines must be sorted by vertex");
        for (int k = 0; k < coords; ++k)
            col.set(v, k, next_int_in(in, "color coordinate", 0,
                                      shape[static_cast<std::size_t>(k)] - 1));
    }
    expect_eof(in);
    return col;
}

void write_coloring(std::ostream& out, const ColorAssignment& col) {
    out << col.n() << ' ' << col.coords();
    for (int b : col.shape()) out << ' ' << b;
    out << '\n';
    for (int v = 0; v < col.n(); ++v) {
        out << v;
        for (int k = 0; k < col.coords(); ++k) out << ' ' << col.get(v, k);
        out << '\n';
    }
}

std::vector<int> read_vertex_list(std::istream& in) {
    std::vector<int> vs;
    long long v;
    while (in >> v) {
        if (v < 0 || v > std::numeric_limits<int>::max())
            throw input_error("vertex out of range");
        vs.push_back(static_cast<int>(v));
    }
    return vs;
}

void write_vertex_list(std::ostream& out, const std::vector<int>& vs) {
    for (int v : vs) out << v << '\n';
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot open file for writing: " + path);
    return out;
}

}  // namespace

Graph load_graph(const std::string& p) { auto in = open_in(p); return read_graph(in); }
void save_graph(const std::string& p, const Graph& g) { auto out = open_out(p); write_graph(out, g); }
Layering load_layering(const std::string& p) { auto in = open_in(p); return read_layering(in); }
void save_layering(const std::string& p, const Layering& l) { auto out = open_out(p); write_layering(out, l); }
VertexPartition load_partition(const std::string& p) { auto in = open_in(p); return read_partition(in); }
void save_partition(const std::string& p, const VertexPartition& x) { auto out = open_out(p); write_partition(out, x); }
SimpleTreeDecomposition load_decomposition(const std::string& p) { auto in = open_in(p); return read_decomposition(in); }
void save_decomposition(const std::string& p, const SimpleTreeDecomposition& d) { auto out = open_out(p); write_decomposition(out, d); }
ColorAssignment load_coloring(const std::string& p) { auto in = open_in(p); return read_coloring(in); }
void save_coloring(const std::string& p, const ColorAssignment& c) { auto out = open_out(p); write_coloring(out, c); }
std::vector<int> load_vertex_list(const std::string& p) { auto in = open_in(p); return read_vertex_list(in); }
void save_vertex_list(const std::string& p, const std::vector<int>& v) { auto out = open_out(p); write_vertex_list(out, v); }

}  // namespace pcc
