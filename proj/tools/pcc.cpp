#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcc/chordal.hpp"
#include "pcc/compose.hpp"
#include "pcc/degree_color.hpp"
#include "pcc/generators.hpp"
#include "pcc/io.hpp"
#include "pcc/oracle.hpp"
#include "pcc/outerplanar.hpp"
#include "pcc/stw_color.hpp"
#include "pcc/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;

void print_violation(const pcc::Violation& viol) {
    std::cout << (viol.kind == pcc::ViolationKind::linear ? "violating path:" : "violator:")
              << " vertices";
    for (int v : viol.vertices) std::cout << ' ' << v;
    std::cout << " colors";
    for (int c : viol.colors) std::cout << ' ' << c;
    std::cout << '\n';
}

std::vector<int> parse_p_range(const std::string& range) {
    std::vector<int> ps;
    auto add = [&ps](const std::string& token) {
        auto dots = token.find("..");
        if (dots == std::string::npos) {
            ps.push_back(std::stoi(token));
        } else {
            int lo = std::stoi(token.substr(0, dots));
            int hi = std::stoi(token.substr(dots + 2));
            for (int p = lo; p <= hi; ++p) ps.push_back(p);
        }
    };
    std::size_t start = 0;
    while (start < range.size()) {
        auto comma = range.find(',', start);
        if (comma == std::string::npos) {
            add(range.substr(start));
            break;
        }
        add(range.substr(start, comma - start));
        start = comma + 1;
    }
    if (ps.empty())
        throw pcc::input_error("empty p range");
    for (int p : ps)
        if (p < 1)
            throw pcc::input_error("p must be at least 1");
    return ps;
}

struct GenerateArgs {
    std::string family;
    std::vector<long long> params;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string decomposition_out, layering_out, partition_out, quotient_out, boundary_out;
    long long size_cap = pcc::kDefaultSizeCap;
};

long long param(const GenerateArgs& a, std::size_t i, const char* name) {
    if (i >= a.params.size())
        throw pcc::input_error(std::string("missing parameter ") + name + " for family " +
                               a.family);
    return a.params[i];
}

std::uint64_t require_seed(const GenerateArgs& a) {
    if (!a.seed)
        throw pcc::input_error("family " + a.family + " is randomized and requires --seed");
    return *a.seed;
}

void expect_params(const GenerateArgs& a, std::size_t count) {
    if (a.params.size() != count)
        throw pcc::input_error("family " + a.family + " takes " + std::to_string(count) +
                               " parameters, got " + std::to_string(a.params.size()));
}

int run_generate(const GenerateArgs& a) {
    pcc::Graph g;
    std::optional<pcc::SimpleTreeDecomposition> dec;
    std::optional<pcc::Layering> lay;
    std::optional<pcc::VertexPartition> part;
    std::optional<pcc::Graph> quot;
    std::optional<std::vector<int>> boundary;

    if (a.family == "fans") {
        expect_params(a, 2);
        g = pcc::tree_of_fans(static_cast<int>(param(a, 0, "w")),
                              static_cast<int>(param(a, 1, "d")), a.size_cap);
    } else if (a.family == "gk") {
        expect_params(a, 3);
        auto gk = pcc::g_k_graph(static_cast<int>(param(a, 0, "k")),
                                 static_cast<int>(param(a, 1, "w")),
                                 static_cast<int>(param(a, 2, "d")), a.size_cap);
        g = std::move(gk.graph);
        boundary = std::move(gk.boundary);
    } else if (a.family == "lower-bound") {
        expect_params(a, 4);
        g = pcc::lower_bound_graph(static_cast<int>(param(a, 0, "p")),
                                   static_cast<int>(param(a, 1, "t")), param(a, 2, "x"),
                                   param(a, 3, "N"), a.size_cap);
    } else if (a.family == "maximal-outerplanar") {
        expect_params(a, 1);
        auto r = pcc::random_maximal_outerplanar(static_cast<int>(param(a, 0, "n")),
                                                 require_seed(a));
        g = std::move(r.graph);
        dec = std::move(r.decomposition);
    } else if (a.family == "stacked") {
        expect_params(a, 1);
        auto r = pcc::random_stacked_triangulation(static_cast<int>(param(a, 0, "n")),
                                                   require_seed(a));
        g = std::move(r.graph);
        dec = std::move(r.decomposition);
    } else if (a.family == "simple-ktree") {
        expect_params(a, 2);
        auto r = pcc::random_simple_ktree(static_cast<int>(param(a, 0, "k")),
                                          static_cast<int>(param(a, 1, "n")), require_seed(a));
        g = std::move(r.graph);
        dec = std::move(r.decomposition);
    } else if (a.family == "bounded-degree") {
        expect_params(a, 3);
        g = pcc::random_bounded_degree(static_cast<int>(param(a, 0, "n")),
                                       static_cast<int>(param(a, 1, "delta")), param(a, 2, "m"),
                                       require_seed(a));
    } else if (a.family == "path") {
        expect_params(a, 1);
        g = pcc::path_graph(static_cast<int>(param(a, 0, "n")));
    } else if (a.family == "cycle") {
        expect_params(a, 1);
        g = pcc::cycle_graph(static_cast<int>(param(a, 0, "n")));
    } else if (a.family == "grid") {
        expect_params(a, 2);
        g = pcc::grid_graph(static_cast<int>(param(a, 0, "rows")),
                            static_cast<int>(param(a, 1, "cols")));
    } else if (a.family == "complete") {
        expect_params(a, 1);
        g = pcc::complete_graph(static_cast<int>(param(a, 0, "n")));
    } else if (a.family == "synth-product") {
        expect_params(a, 3);
        std::uint64_t seed = require_seed(a);
        auto host = pcc::random_stacked_triangulation(static_cast<int>(param(a, 0, "host_n")),
                                                      seed);
        auto inst = pcc::synth_product_instance(host.graph, static_cast<int>(param(a, 1, "layers")),
                                                static_cast<int>(param(a, 2, "blowup")), seed + 1);
        g = std::move(inst.graph);
        lay = std::move(inst.layering);
        part = std::move(inst.partition);
        quot = pcc::quotient(g, *part);
        dec = std::move(host.decomposition);
    } else {
        throw pcc::input_error("unknown family: " + a.family);
    }

    pcc::save_graph(a.out, g);
    if (!a.decomposition_out.empty()) {
        if (!dec)
            throw pcc::input_error("family " + a.family + " does not emit a decomposition");
        pcc::save_decomposition(a.decomposition_out, *dec);
    }
    if (!a.layering_out.empty()) {
        if (!lay)
            throw pcc::input_error("family " + a.family + " does not emit a layering");
        pcc::save_layering(a.layering_out, *lay);
    }
    if (!a.partition_out.empty()) {
        if (!part)
            throw pcc::input_error("family " + a.family + " does not emit a partition");
        pcc::save_partition(a.partition_out, *part);
    }
    if (!a.quotient_out.empty()) {
        if (!quot)
            throw pcc::input_error("family " + a.family + " does not emit a quotient");
        pcc::save_graph(a.quotient_out, *quot);
    }
    if (!a.boundary_out.empty()) {
        if (!boundary)
            throw pcc::input_error("family " + a.family + " does not emit a boundary set");
        pcc::save_vertex_list(a.boundary_out, *boundary);
    }
    std::cout << "generated " << a.family << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges\n";
    return kExitOk;
}

struct ColorArgs {
    std::string algo;
    int p = 1;
    std::string graph_in, out;
    std::optional<std::uint64_t> seed;
    double palette_scale = 1.0;
    bool doubled = false;
    std::optional<long long> palette;
    std::optional<long long> iteration_cap;
    std::string layout_in;
    std::string decomposition_in, layer_decompositions_dir;
    std::string layering_in, partition_in, quotient_coloring_in;
    bool verify_quotient = false;
    std::string z_set_in, gplus_in, w_layering_in, gplus_coloring_in;
    int genus = 0;
    bool verify_output = false;
};

int run_color(const ColorArgs& a) {
    pcc::Graph g = pcc::load_graph(a.graph_in);
    pcc::ColorAssignment col;
    long long palette_bound = 0;
    long long iterations = 0;

    if (a.algo == "degree") {
        if (!a.seed)
            throw pcc::input_error("--algo degree is randomized and requires --seed");
        pcc::DegreeColorConfig cfg;
        cfg.p = a.p;
        cfg.seed = *a.seed;
        cfg.palette_scale = a.palette_scale;
        cfg.doubled_mode = a.doubled;
        cfg.palette = a.palette;
        cfg.iteration_cap = a.iteration_cap;
        pcc::DegreeRunStats stats;
        auto result = pcc::color_bounded_degree(g, cfg, &stats);
        iterations = stats.iterations;
        palette_bound = stats.palette;
        if (!result)
            throw pcc::resource_error("iteration cap " + std::to_string(stats.cap) +
                                      " reached after uncoloring " +
                                      std::to_string(stats.uncolored_total) +
                                      " vertices; retry with a new seed or --doubled");
        col = std::move(*result);
    } else if (a.algo == "outerplanar") {
        std::optional<pcc::OuterplanarLayout> layout;
        if (!a.layout_in.empty())
            layout = pcc::OuterplanarLayout{pcc::load_vertex_list(a.layout_in)};
        col = pcc::color_outerplanar(g, a.p, layout);
        palette_bound = pcc::outerplanar_palette_bound(a.p);
    } else if (a.algo == "stw") {
        if (a.decomposition_in.empty())
            throw pcc::input_error("--algo stw requires --decomposition");
        auto dec = pcc::load_decomposition(a.decomposition_in);
        std::map<int, pcc::SimpleTreeDecomposition> layer_decs;
        if (!a.layer_decompositions_dir.empty()) {
            for (const auto& entry :
                 std::filesystem::directory_iterator(a.layer_decompositions_dir)) {
                auto name = entry.path().filename().string();
                if (name.rfind("layer", 0) == 0 && entry.path().extension() == ".dec")
                    layer_decs[std::stoi(name.substr(5))] =
                        pcc::load_decomposition(entry.path().string());
            }
        }
        col = pcc::color_simple_treewidth(g, dec, a.p,
                                          layer_decs.empty() ? nullptr : &layer_decs);
        palette_bound = pcc::stw_palette_bound(std::max(dec.width, 1), a.p);
    } else if (a.algo == "planar-compose") {
        if (a.layering_in.empty() || a.partition_in.empty() || a.quotient_coloring_in.empty())
            throw pcc::input_error(
                "--algo planar-compose requires --layering, --partition and --quotient-coloring");
        auto lay = pcc::load_layering(a.layering_in);
        auto part = pcc::load_partition(a.partition_in);
        auto psi = pcc::load_coloring(a.quotient_coloring_in);
        col = pcc::compose_planar(g, lay, part, psi, a.p, a.verify_quotient);
        palette_bound = 3LL * (a.p + 1) * psi.palette_size();
    } else if (a.algo == "genus-compose") {
        if (a.layering_in.empty() || a.z_set_in.empty() || a.gplus_in.empty() ||
            a.w_layering_in.empty() || a.gplus_coloring_in.empty())
            throw pcc::input_error(
                "--algo genus-compose requires --layering, --z-set, --gplus, --w-layering and "
                "--gplus-coloring");
        auto lay = pcc::load_layering(a.layering_in);
        pcc::GenusComposeInputs in;
        in.z_set = pcc::load_vertex_list(a.z_set_in);
        in.gplus = pcc::load_graph(a.gplus_in);
        in.w_layering = pcc::load_layering(a.w_layering_in);
        in.gplus_coloring = pcc::load_coloring(a.gplus_coloring_in);
        in.genus = a.genus;
        col = pcc::compose_genus(g, lay, in, a.p);
        palette_bound =
            2LL * a.genus * (a.p + 1) + in.gplus_coloring.palette_size();
    } else {
        throw pcc::input_error("unknown coloring algorithm: " + a.algo);
    }

    pcc::save_coloring(a.out, col);
    std::cout << "colors_used=" << col.distinct_used() << " palette_bound=" << palette_bound
              << " iterations=" << iterations << '\n';
    if (a.verify_output) {
        auto res = pcc::is_p_centered(g, col, a.p, pcc::VerifyMode::growth);
        if (!res.ok) {
            std::cout << "verification failed\n";
            if (res.violation)
                print_violation(*res.violation);
            return kExitVerifyFalse;
        }
        std::cout << "verified p-centered for p=" << a.p << '\n';
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph_in, coloring_in;
    int p = 1;
    std::string mode = "growth";
    bool linear = false;
    int linear_cap = pcc::kDefaultLinearVertexCap;
};

int run_verify(const VerifyArgs& a) {
    pcc::Graph g = pcc::load_graph(a.graph_in);
    pcc::ColorAssignment col = pcc::load_coloring(a.coloring_in);
    if (col.n() != g.vertex_count())
        throw pcc::input_error("coloring covers " + std::to_string(col.n()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    pcc::VerifyResult res;
    if (a.linear) {
        res = pcc::is_p_linear(g, col, a.p, a.linear_cap);
    } else {
        auto mode = a.mode == "subsets" ? pcc::VerifyMode::subsets : pcc::VerifyMode::growth;
        res = pcc::is_p_centered(g, col, a.p, mode);
    }
    if (res.ok) {
        std::cout << (a.linear ? "p-linear" : "p-centered") << " for p=" << a.p << '\n';
        return kExitOk;
    }
    std::cout << "NOT " << (a.linear ? "p-linear" : "p-centered") << " for p=" << a.p << '\n';
    if (res.violation)
        print_violation(*res.violation);
    return kExitVerifyFalse;
}

struct ExactArgs {
    std::string graph_in;
    int p = 1;
    bool linear = false;
    int max_colors = 8;
    std::optional<int> decision;
    std::string witness_out;
    double time_budget = 0.0;  // 0 = unlimited
};

int run_exact(const ExactArgs& a) {
    pcc::Graph g = pcc::load_graph(a.graph_in);
    pcc::OracleOptions opts;
    opts.want_witness = !a.witness_out.empty();
    if (a.time_budget > 0)
        opts.deadline = pcc::Deadline::after_seconds(a.time_budget);
    const char* name = a.linear ? "lin_p" : "chi_p";

    if (a.decision) {
        opts.max_colors = *a.decision - 1;
        if (opts.max_colors < 1) {
            std::cout << name << " >= " << *a.decision << ": "
                      << (g.vertex_count() > 0 ? "true" : "false") << '\n';
            return kExitOk;
        }
        auto out = a.linear ? pcc::lin_p_exact(g, a.p, opts) : pcc::chi_p_exact(g, a.p, opts);
        std::cout << name << " >= " << *a.decision << ": " << (out.value ? "false" : "true")
                  << '\n';
        return kExitOk;
    }

    opts.max_colors = a.max_colors;
    auto out = a.linear ? pcc::lin_p_exact(g, a.p, opts) : pcc::chi_p_exact(g, a.p, opts);
    if (!out.value) {
        std::cout << name << " exceeds max-colors " << a.max_colors << '\n';
        return kExitOk;
    }
    std::cout << name << " = " << *out.value << '\n';
    if (!a.witness_out.empty() && out.witness)
        pcc::save_coloring(a.witness_out, *out.witness);
    return kExitOk;
}

struct BenchArgs {
    std::string family;
    int n = 0;
    int k = 3;
    int delta = 3;
    std::optional<long long> edges;
    int fans_w = 2, fans_d = 4;
    std::string p_range = "1..3";
    int seeds = 1;
    std::string csv_out;
    std::string algo;  // default per family
    bool doubled = false;
    double palette_scale = 1.0;
    std::string mode = "growth";
};

struct BenchRow {
    std::string family;
    int n, p;
    std::uint64_t seed;
    long long colors_used, palette_bound, iterations, runtime_ms;
    bool verified;
};

int run_bench(const BenchArgs& a) {
    auto ps = parse_p_range(a.p_range);
    if (a.seeds < 1)
        throw pcc::input_error("--seeds must be at least 1");
    std::string algo = a.algo;
    if (algo.empty()) {
        if (a.family == "stacked" || a.family == "simple-ktree")
            algo = "stw";
        else if (a.family == "maximal-outerplanar" || a.family == "fans")
            algo = "outerplanar";
        else if (a.family == "bounded-degree")
            algo = "degree";
        else
            throw pcc::input_error("no default algorithm for family " + a.family);
    }
    auto mode = a.mode == "subsets" ? pcc::VerifyMode::subsets : pcc::VerifyMode::growth;

    std::vector<BenchRow> rows;
    for (int p : ps) {
        for (int s = 0; s < a.seeds; ++s) {
            std::uint64_t seed = static_cast<std::uint64_t>(s);
            pcc::Graph g;
            std::optional<pcc::SimpleTreeDecomposition> dec;
            if (a.family == "stacked") {
                auto r = pcc::random_stacked_triangulation(a.n, seed);
                g = std::move(r.graph);
                dec = std::move(r.decomposition);
            } else if (a.family == "maximal-outerplanar") {
                auto r = pcc::random_maximal_outerplanar(a.n, seed);
                g = std::move(r.graph);
                dec = std::move(r.decomposition);
            } else if (a.family == "simple-ktree") {
                auto r = pcc::random_simple_ktree(a.k, a.n, seed);
                g = std::move(r.graph);
                dec = std::move(r.decomposition);
            } else if (a.family == "fans") {
                g = pcc::tree_of_fans(a.fans_w, a.fans_d);
            } else if (a.family == "bounded-degree") {
                if (!a.edges)
                    throw pcc::input_error("family bounded-degree requires --edges");
                g = pcc::random_bounded_degree(a.n, a.delta, *a.edges, seed);
            } else {
                throw pcc::input_error("unknown bench family: " + a.family);
            }

            BenchRow row;
            row.family = a.family;
            row.n = g.vertex_count();
            row.p = p;
            row.seed = seed;
            row.iterations = 0;
            auto t0 = std::chrono::steady_clock::now();
            std::optional<pcc::ColorAssignment> col;
            if (algo == "degree") {
                pcc::DegreeColorConfig cfg;
                cfg.p = p;
                cfg.seed = seed;
                cfg.doubled_mode = a.doubled;
                cfg.palette_scale = a.palette_scale;
                pcc::DegreeRunStats stats;
                col = pcc::color_bounded_degree(g, cfg, &stats);
                row.iterations = stats.iterations;
                row.palette_bound = stats.palette;
            } else if (algo == "outerplanar") {
                col = pcc::color_outerplanar(g, p);
                row.palette_bound = pcc::outerplanar_palette_bound(p);
            } else if (algo == "stw") {
                if (!dec)
                    throw pcc::input_error("family " + a.family +
                                           " has no decomposition for --algo stw");
                col = pcc::color_simple_treewidth(g, *dec, p);
                row.palette_bound = pcc::stw_palette_bound(std::max(dec->width, 1), p);
            } else {
                throw pcc::input_error("unknown bench algorithm: " + algo);
            }
            auto t1 = std::chrono::steady_clock::now();
            row.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            if (col) {
                row.colors_used = col->distinct_used();
                row.verified = pcc::is_p_centered(g, *col, p, mode).ok;
            } else {
                row.colors_used = 0;
                row.verified = false;
            }
            rows.push_back(std::move(row));
        }
    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
        return std::tie(x.family, x.n, x.p, x.seed) < std::tie(y.family, y.n, y.p, y.seed);
    });
    std::ofstream out(a.csv_out);
    if (!out)
        throw pcc::input_error("cannot open csv file: " + a.csv_out);
    out << "family,n,p,seed,colors_used,palette_bound,iterations,runtime_ms,verified\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.n << ',' << r.p << ',' << r.seed << ',' << r.colors_used
            << ',' << r.palette_bound << ',' << r.iterations << ',' << r.runtime_ms << ','
            << (r.verified ? "true" : "false") << '\n';
    std::cout << "wrote " << rows.size() << " rows to " << a.csv_out << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-centered coloring toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate a graph family instance");
    generate->add_option("family", gen.family, "family name")->required();
    generate->add_option("params", gen.params, "family parameters");
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("-o,--out", gen.out, "output graph file")->required();
    generate->add_option("--decomposition", gen.decomposition_out);
    generate->add_option("--layering", gen.layering_out);
    generate->add_option("--partition", gen.partition_out);
    generate->add_option("--quotient", gen.quotient_out);
    generate->add_option("--boundary", gen.boundary_out);
    generate->add_option("--size-cap", gen.size_cap);

    ColorArgs col;
    auto* color = app.add_subcommand("color", "compute a p-centered coloring");
    color->add_option("--algo", col.algo, "degree|outerplanar|stw|planar-compose|genus-compose")
        ->required();
    color->add_option("-p", col.p, "centering parameter")->required();
    color->add_option("-g,--graph", col.graph_in)->required();
    color->add_option("-o,--out", col.out)->required();
    color->add_option("--seed", col.seed);
    color->add_option("--palette-scale", col.palette_scale);
    color->add_flag("--doubled", col.doubled);
    color->add_option("--palette", col.palette);
    color->add_option("--iteration-cap", col.iteration_cap);
    color->add_option("--layout", col.layout_in);
    color->add_option("--decomposition", col.decomposition_in);
    color->add_option("--layer-decompositions", col.layer_decompositions_dir);
    color->add_option("--layering", col.layering_in);
    color->add_option("--partition", col.partition_in);
    color->add_option("--quotient-coloring", col.quotient_coloring_in);
    color->add_flag("--verify-quotient", col.verify_quotient);
    color->add_option("--z-set", col.z_set_in);
    color->add_option("--gplus", col.gplus_in);
    color->add_option("--w-layering", col.w_layering_in);
    color->add_option("--gplus-coloring", col.gplus_coloring_in);
    color->add_option("--genus", col.genus);
    color->add_flag("--verify", col.verify_output);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("-g,--graph", ver.graph_in)->required();
    verify->add_option("-c,--coloring", ver.coloring_in)->required();
    verify->add_option("-p", ver.p)->required();
    verify->add_option("--mode", ver.mode, "growth|subsets");
    verify->add_flag("--linear", ver.linear);
    verify->add_option("--linear-cap", ver.linear_cap);

    ExactArgs ex;
    auto* exact = app.add_subcommand("exact", "exact chromatic numbers on small graphs");
    exact->add_option("-g,--graph", ex.graph_in)->required();
    exact->add_option("-p", ex.p)->required();
    exact->add_flag("--linear", ex.linear);
    exact->add_option("--max-colors", ex.max_colors);
    exact->add_option("--decision", ex.decision, "test value >= K instead of computing");
    exact->add_option("-o,--out", ex.witness_out, "witness coloring file");
    exact->add_option("--time-budget", ex.time_budget, "seconds");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "benchmark harness, CSV output");
    bench_cmd->add_option("--family", bench.family)->required();
    bench_cmd->add_option("--n", bench.n);
    bench_cmd->add_option("--k", bench.k);
    bench_cmd->add_option("--delta", bench.delta);
    bench_cmd->add_option("--edges", bench.edges);
    bench_cmd->add_option("--w", bench.fans_w);
    bench_cmd->add_option("--d", bench.fans_d);
    bench_cmd->add_option("--p", bench.p_range, "single value, a..b, or comma list")->required();
    bench_cmd->add_option("--seeds", bench.seeds);
    bench_cmd->add_option("--csv", bench.csv_out)->required();
    bench_cmd->add_option("--algo", bench.algo);
    bench_cmd->add_flag("--doubled", bench.doubled);
    bench_cmd->add_option("--palette-scale", bench.palette_scale);
    bench_cmd->add_option("--mode", bench.mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << '\n' << "run with --help for usage\n";
        return kExitInputError;
    }

    try {
        if (*generate)
            return run_generate(gen);
        if (*color)
            return run_color(col);
        if (*verify)
            return run_verify(ver);
        if (*exact)
            return run_exact(ex);
        if (*bench_cmd)
            return run_bench(bench);
        return kExitInputError;
    } catch (const pcc::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const pcc::resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResourceError;
    } catch (const pcc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitResourceError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
