#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcc/generators.hpp"
#include "pcc/oracle.hpp"
#include "pcc/verifier.hpp"
#include "test_util.hpp"

using namespace pcc;
using pcc_test::make_graph;

namespace {

/// Exhaustive minimum over all k^n colorings, checked with the brute-force
/// definition. Independent of the oracle's search.
int exhaustive_chi_p(const Graph& g, int p, bool linear) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        while (true) {
            bool ok = linear ? pcc_test::brute_is_p_linear(g, colors, p)
                             : pcc_test::brute_is_p_centered(g, colors, p);
            if (ok)
                return k;
            int i = n - 1;
            while (i >= 0 && colors[static_cast<std::size_t>(i)] == k - 1) {
                colors[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++colors[static_cast<std::size_t>(i)];
        }
    }
    return n;
}

}  // namespace

TEST_CASE("chi examples") {
    OracleOptions opts;
    opts.max_colors = 6;

    // 1-centered = proper, so the odd cycle needs 3.
    CHECK(chi_p_exact(cycle_graph(5), 1, opts).value == 3);

    Graph k4 = complete_graph(4);
    CHECK(chi_p_exact(k4, 1, opts).value == 4);
    CHECK(chi_p_exact(k4, 2, opts).value == 4);
    CHECK(chi_p_exact(k4, 3, opts).value == 4);

    CHECK(chi_p_exact(path_graph(4), 2, opts).value == 3);
}

TEST_CASE("lin examples") {
    OracleOptions opts;
    opts.max_colors = 6;
    CHECK(lin_p_exact(complete_graph(3), 1, opts).value == 3);
    CHECK(lin_p_exact(Graph(1), 1, opts).value == 1);
    CHECK(lin_p_exact(Graph(1), 3, opts).value == 1);

    // Any tree containing a 4-vertex path needs a third color for p = 2.
    Graph spider = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
    OracleOptions decide;
    decide.max_colors = 2;
    CHECK(!lin_p_exact(spider, 2, decide).value.has_value());  // lin_2 >= 3
}

TEST_CASE("oracle agrees with exhaustive minima on tiny graphs") {
    std::vector<Graph> graphs{
        path_graph(4),     path_graph(5), cycle_graph(4), cycle_graph(5),
        complete_graph(4), make_graph(4, {{0, 1}, {0, 2}, {0, 3}}),
        make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}),
    };
    OracleOptions opts;
    opts.max_colors = 6;
    for (const auto& g : graphs) {
        for (int p = 1; p <= 2; ++p) {
            auto chi = chi_p_exact(g, p, opts);
            REQUIRE(chi.value.has_value());
            CHECK(*chi.value == exhaustive_chi_p(g, p, false));
            auto lin = lin_p_exact(g, p, opts);
            REQUIRE(lin.value.has_value());
            CHECK(*lin.value == exhaustive_chi_p(g, p, true));
            CHECK(*lin.value <= *chi.value);  // every p-centered coloring is p-linear
        }
    }
}

TEST_CASE("chi_1 equals an independent chromatic number") {
    int tested = 0;
    OracleOptions opts;
    opts.max_colors = 8;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = pcc_test::random_test_graph(7, 0.35, seed + 42);
        auto chi = chi_p_exact(g, 1, opts);
        REQUIRE(chi.value.has_value());
        CHECK(*chi.value == pcc_test::brute_chromatic_number(g));
        ++tested;
    }
    CHECK(tested == 60);
}

TEST_CASE("oracle is monotone in p and its witnesses verify") {
    OracleOptions opts;
    opts.max_colors = 8;
    opts.want_witness = true;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = pcc_test::random_test_graph(7, 0.3, seed + 77);
        int prev = 0;
        for (int p = 1; p <= 3; ++p) {
            auto out = chi_p_exact(g, p, opts);
            REQUIRE(out.value.has_value());
            CHECK(*out.value >= prev);
            prev = *out.value;
            REQUIRE(out.witness.has_value());
            CHECK(is_p_centered(g, *out.witness, p, VerifyMode::subsets).ok);
        }
    }
}

TEST_CASE("lin witnesses verify") {
    OracleOptions opts;
    opts.max_colors = 8;
    opts.want_witness = true;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = pcc_test::random_test_graph(6, 0.3, seed + 300);
        for (int p = 1; p <= 2; ++p) {
            auto out = lin_p_exact(g, p, opts);
            REQUIRE(out.value.has_value());
            REQUIRE(out.witness.has_value());
            CHECK(is_p_linear(g, *out.witness, p).ok);
        }
    }
}

TEST_CASE("max_colors bound is honest") {
    OracleOptions opts;
    opts.max_colors = 3;
    CHECK(!chi_p_exact(complete_graph(5), 1, opts).value.has_value());
    opts.max_colors = 5;
    CHECK(chi_p_exact(complete_graph(5), 1, opts).value == 5);
}

TEST_CASE("time budget raises a resource error") {
    OracleOptions opts;
    opts.max_colors = 7;
    opts.deadline = Deadline::after_seconds(0.0);
    Graph g = pcc_test::random_test_graph(12, 0.5, 9);
    CHECK_THROWS_AS(chi_p_exact(g, 2, opts), resource_error);
}
