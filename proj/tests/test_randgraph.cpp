#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hjump/errors.hpp"
#include "hjump/randgraph.hpp"
#include "hjump/rational.hpp"
#include "hjump/rng.hpp"

using namespace hjump;

namespace {

RGraph graph_of(int n, const std::vector<std::vector<Vertex>>& edges) {
    return RGraph(make_pattern(3, n, edges));
}

SolverConfig quick_cfg(int restarts) {
    SolverConfig cfg;
    cfg.restarts = restarts;
    return cfg;
}

}  // namespace

TEST_CASE("bad sets on hand-built graphs") {
    // Three edges on four vertices reach the |S| - r + 2 threshold.
    auto bad = find_bad_sets(graph_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}), 4);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == std::vector<Vertex>{1, 2, 3, 4});

    // Two edges stay below it.
    CHECK(find_bad_sets(graph_of(4, {{1, 2, 3}, {1, 2, 4}}), 4).empty());
    CHECK(verify_sparse_property(graph_of(4, {{1, 2, 3}, {1, 2, 4}}), 4));

    // Complete K4 is bad.
    CHECK_FALSE(verify_sparse_property(graph_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 4));

    // Fewer than two edges can never form a bad set.
    CHECK(find_bad_sets(graph_of(4, {{1, 2, 3}}), 4).empty());
    CHECK(find_bad_sets(graph_of(4, {}), 4).empty());

    // m = r skips every size: C(s, r) < s - r + 2 throughout.
    CHECK(verify_sparse_property(graph_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 3));
}

TEST_CASE("bad sets are ordered and larger supersets appear too") {
    auto bad = find_bad_sets(
        graph_of(8, {{5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}}), 5);
    REQUIRE(bad.size() >= 2);
    CHECK(bad[0] == std::vector<Vertex>{1, 2, 3, 4});
    bool has_second = false;
    for (const auto& s : bad)
        if (s == std::vector<Vertex>{5, 6, 7, 8}) has_second = true;
    CHECK(has_second);
    for (std::size_t i = 1; i < bad.size(); ++i) {
        CHECK(bad[i - 1][0] <= bad[i][0]);  // grouped by smallest element
    }
}

TEST_CASE("bad set search respects its budget") {
    RGraph g = graph_of(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {1, 4, 7}});
    CHECK_THROWS_AS(find_bad_sets(g, 6, 0, 10), BudgetError);
}

TEST_CASE("sampler validation") {
    CHECK_THROWS_AS(sample_sparse_graph(1, 5, 0.05, 30, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_sparse_graph(3, 2, 0.05, 30, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_sparse_graph(3, 5, 0.0, 30, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_sparse_graph(3, 5, 0.05, 2, 1), std::invalid_argument);
    // p = 3 (c/t) r! must stay a probability.
    CHECK_THROWS_AS(sample_sparse_graph(3, 5, 10.0, 5, 1), std::invalid_argument);
    // Edge packing limits the vertex count and uniformity.
    CHECK_THROWS_AS(sample_sparse_graph(3, 5, 0.001, 300, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_sparse_graph(9, 9, 1e-9, 20, 1), std::invalid_argument);
}

TEST_CASE("sampler reaches a verified fixed point") {
    SparseGraphReport rep = sample_sparse_graph(3, 5, 0.05, 30, 2024);
    CHECK(rep.success);
    CHECK(rep.verified);
    CHECK(rep.r == 3);
    CHECK(rep.m == 5);
    CHECK(rep.t == 30);
    CHECK(rep.p == doctest::Approx(3.0 * (0.05 / 30) * 6).epsilon(1e-15));
    CHECK(rep.graph.order() == 30);
    CHECK(static_cast<long long>(rep.graph.edge_count()) == rep.edges_after);
    CHECK(rep.edges_after >= 0.05 * 30 * 30 - 1e-9);
    CHECK(rep.edges_after <= rep.edges_before);
    // Deletion really was a fixed point.
    CHECK(find_bad_sets(rep.graph, 5).empty());
}

TEST_CASE("sampler is deterministic per seed") {
    SparseGraphReport a = sample_sparse_graph(3, 5, 0.05, 30, 99);
    SparseGraphReport b = sample_sparse_graph(3, 5, 0.05, 30, 99);
    CHECK(a.edges_before == b.edges_before);
    CHECK(a.edges_after == b.edges_after);
    CHECK(a.bad_sets_found == b.bad_sets_found);
    CHECK(a.graph.pattern().edges() == b.graph.pattern().edges());

    SparseGraphReport c = sample_sparse_graph(3, 5, 0.05, 30, 100);
    CHECK(a.graph.pattern().edges() != c.graph.pattern().edges());
}

TEST_CASE("sample edge counts track the target probability") {
    double total = 0.0;
    const int runs = 50;
    for (int s = 0; s < runs; ++s)
        total += static_cast<double>(sample_sparse_graph(3, 5, 0.05, 30, 7000 + s).edges_before);
    double mean = total / runs;
    double expect = 3.0 * (0.05 / 30) * 6 * binomial(30, 3);
    CHECK(std::abs(mean - expect) / expect < 0.05);
}

TEST_CASE("sampler reports failure instead of throwing") {
    // p = 1 fills the graph; with m = 5 every 4-set is then bad, so the
    // deletion pass wipes out every edge on every attempt.
    SparseGraphReport rep = sample_sparse_graph(3, 5, 2.0 / 3.0, 12, 5, 3);
    CHECK_FALSE(rep.success);
    CHECK(rep.verified);
    CHECK(rep.edges_after == 0);
    CHECK(rep.retries_used == 2);  // zero-based index of the final attempt
}

TEST_CASE("composite graph at degenerate scale") {
    RPattern p = make_pattern(4, 3, {{1, 2, 3, 3}});
    TheoremGraphReport rep = build_theorem_graph(p, 3, 5, 0.01, 2, 42, quick_cfg(20));
    CHECK(rep.graph.order() == 6);
    CHECK(rep.sparse.success);
    CHECK(rep.sparse.graph.edge_count() == 0);
    CHECK(rep.weights.size() == 6);
    CHECK(rep.gain == 0.0);
    CHECK(rep.value == rep.base_value);
    CHECK_FALSE(rep.gain_meets_target);
    CHECK(rep.lambda_p == doctest::Approx(1.0 / 128).epsilon(1e-10));
}

TEST_CASE("composite graph with a planted sparse layer") {
    RPattern p = make_pattern(4, 3, {{1, 2, 3, 3}});
    TheoremGraphReport rep = build_theorem_graph(p, 3, 5, 0.01, 8, 4242, quick_cfg(20));
    CHECK(rep.graph.order() == 24);
    CHECK(rep.sparse.success);
    CHECK(rep.pivot_weight == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rep.value == doctest::Approx(rep.base_value + rep.gain).epsilon(1e-12));
    CHECK(rep.target_gain == doctest::Approx((0.01 / 8) * std::pow(rep.pivot_weight, 4)).epsilon(1e-9));
    // The composite weighting really evaluates to the reported value.
    double direct = pattern_weight(rep.graph.pattern(), std::span<const double>(rep.weights));
    CHECK(direct == doctest::Approx(rep.value).epsilon(1e-12));

    CHECK_THROWS_AS(build_theorem_graph(p, 7, 5, 0.01, 8, 1, quick_cfg(10)), std::invalid_argument);
    CHECK_THROWS_AS(build_theorem_graph(p, 3, 5, 0.01, 0, 1, quick_cfg(10)), std::invalid_argument);
    // A pattern whose scaled lagrangian reaches one is rejected.
    RPattern loop = make_pattern(2, 1, {{1, 1}});
    CHECK_THROWS_AS(build_theorem_graph(loop, 1, 3, 0.01, 4, 1, quick_cfg(10)), std::invalid_argument);
}

TEST_CASE("small subgraph bound on a blow-up") {
    RPattern k3 = make_pattern(3, 3, {{1, 2, 3}});
    RGraph g = simple_blow_up(k3, BlowupSpec{{2, 2, 2}}).graph;
    SubgraphBoundReport rep = check_small_subgraph_bound(g, k3, 1, 4, quick_cfg(20));
    CHECK(rep.exhaustive);
    CHECK(rep.m == 4);
    CHECK(rep.within_bound);
    CHECK(rep.max_scaled == doctest::Approx(2.0 / 9).epsilon(1e-8));
    CHECK(rep.bound == doctest::Approx(2.0 / 9 + 1e-6).epsilon(1e-6));
    // Triangles and pairs of triangles sharing two vertices tie at 2/9, so
    // only the size range is pinned down.
    CHECK(rep.argmax.size() >= 3);
    CHECK(rep.argmax.size() <= 4);
    CHECK(rep.solver_calls >= 1);
    // The canonical-form cache keeps distinct solves far below the subset count.
    CHECK(rep.solver_calls < rep.subsets_checked / 4);

    CHECK_THROWS_AS(check_small_subgraph_bound(g, k3, 1, 2, quick_cfg(10)), std::invalid_argument);
    CHECK_THROWS_AS(check_small_subgraph_bound(g, make_pattern(4, 3, {{1, 2, 3, 3}}), 1, 5,
                                               quick_cfg(10)),
                    std::invalid_argument);

    // An impossible exhaustive budget falls back to sampling.
    SubgraphBoundReport sampled =
        check_small_subgraph_bound(g, k3, 1, 4, quick_cfg(10), 50, 30);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.subsets_checked <= 50);
}
