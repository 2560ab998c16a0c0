#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hjump/pattern.hpp"
#include "hjump/rng.hpp"

using namespace hjump;

namespace {

// C(k + m - 1, m): multisets of size m over k copies.
long long multichoose(int k, int m) { return binomial(k + m - 1, m); }

RPattern theorem_r3_pattern() {
    return make_pattern(3, 4, {{1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 2, 3}, {1, 3, 4}, {2, 3, 4}});
}

}  // namespace

TEST_CASE("edges canonicalize order and merge multiplicities") {
    Edge a = Edge::from_vertices({2, 1, 2});
    Edge b = Edge::from_vertices({1, 2, 2});
    CHECK(a == b);
    CHECK(a.multiplicity(2) == 2);
    CHECK(a.multiplicity(1) == 1);
    CHECK(a.multiplicity(7) == 0);
    CHECK(a.total_multiplicity() == 3);
    CHECK(a.max_vertex() == 2);
    CHECK_FALSE(a.simple());
    CHECK(a.to_vertices() == std::vector<Vertex>{1, 2, 2});
    CHECK(a.to_string() == "1 2 2");
    CHECK(Edge::from_vertices({3, 1, 2}).simple());
}

TEST_CASE("make_pattern validates and deduplicates") {
    RPattern p = make_pattern(3, 3, {{1, 2, 3}, {3, 2, 1}, {1, 1, 2}});
    CHECK(p.uniformity() == 3);
    CHECK(p.order() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(p.contains(Edge::from_vertices({2, 1, 1})));
    CHECK_FALSE(p.contains(Edge::from_vertices({2, 2, 3})));
    CHECK_FALSE(p.simple());
    CHECK(is_simple(make_pattern(3, 4, {{1, 2, 3}, {2, 3, 4}})));

    CHECK_THROWS_AS(make_pattern(1, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(3, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(3, 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(3, 3, {{1, 2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(3, 3, {{0, 1, 2}}), std::invalid_argument);

    // Empty edge list is a valid (if dull) pattern.
    CHECK(make_pattern(3, 2, {}).edge_count() == 0);
}

TEST_CASE("r-graph construction rejects repeated vertices") {
    CHECK_NOTHROW(RGraph(make_pattern(3, 3, {{1, 2, 3}})));
    CHECK_THROWS_AS(RGraph(make_pattern(3, 3, {{1, 1, 2}})), std::invalid_argument);
}

TEST_CASE("blow-up lift counts follow the product formulas") {
    RPattern p = make_pattern(3, 2, {{1, 1, 2}});
    BlowupSpec spec{{2, 3}};

    // Full blow-up: every multiset lift.
    BlownUpPattern full = blow_up(p, spec);
    CHECK(full.pattern.order() == 5);
    CHECK(static_cast<long long>(full.pattern.edge_count()) ==
          multichoose(2, 2) * multichoose(3, 1));
    CHECK(full.origin.size() == 5);
    CHECK(full.origin[0].source == 1);
    CHECK(full.origin[0].copy == 1);
    CHECK(full.origin[2].source == 2);
    CHECK(full.origin[2].copy == 1);

    // Simple blow-up: only repeat-free lifts.
    BlownUpGraph simple = simple_blow_up(p, spec);
    CHECK(static_cast<long long>(simple.graph.edge_count()) == binomial(2, 2) * binomial(3, 1));

    // A multiplicity that exceeds the copy count has no simple lift.
    BlownUpGraph none = simple_blow_up(make_pattern(3, 2, {{1, 1, 1}}), BlowupSpec{{2, 1}});
    CHECK(none.graph.edge_count() == 0);

    CHECK_THROWS_AS(blow_up(p, BlowupSpec{{2}}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(p, BlowupSpec{{2, 0}}), std::invalid_argument);
}

TEST_CASE("blow-up counts on a multi-edge pattern") {
    RPattern p = theorem_r3_pattern();
    BlowupSpec spec{{2, 2, 2, 2}};
    long long expect_full = 0;
    long long expect_simple = 0;
    for (const Edge& e : p.edges()) {
        long long f = 1, s = 1;
        for (auto [v, m] : e.items()) {
            f *= multichoose(2, m);
            s *= binomial(2, m);
        }
        expect_full += f;
        expect_simple += s;
    }
    CHECK(static_cast<long long>(blow_up(p, spec).pattern.edge_count()) == expect_full);
    CHECK(static_cast<long long>(simple_blow_up(p, spec).graph.edge_count()) == expect_simple);
}

TEST_CASE("induced subpattern reindexes edges inside the subset") {
    RPattern p = theorem_r3_pattern();
    RPattern q = induced_subpattern(p, {1, 3, 4});
    CHECK(q.order() == 3);
    // Surviving edges: 133, 144, 134 under the map 1->1, 3->2, 4->3.
    CHECK(q.edge_count() == 3);
    CHECK(q.contains(Edge::from_vertices({1, 2, 2})));
    CHECK(q.contains(Edge::from_vertices({1, 3, 3})));
    CHECK(q.contains(Edge::from_vertices({1, 2, 3})));

    CHECK_THROWS_AS(induced_subpattern(p, {}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subpattern(p, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subpattern(p, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subpattern(p, {1, 5}), std::invalid_argument);
}

TEST_CASE("density is exact") {
    RGraph g(make_pattern(3, 5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}));
    CHECK(density(g) == Rational(3, 10));
    RGraph empty(make_pattern(3, 5, {}));
    CHECK(density(empty) == Rational(0, 1));
}

TEST_CASE("edge and pattern weights match hand values") {
    Weighting u3 = Weighting::uniform(3);
    CHECK(edge_weight(Edge::from_vertices({1, 2, 2}), u3.values()) == doctest::Approx(1.0 / 54).epsilon(1e-14));
    CHECK(edge_weight(Edge::from_vertices({1, 2, 3}), u3.values()) == doctest::Approx(1.0 / 27).epsilon(1e-14));

    Weighting w({0.25, 0.25, 0.5});
    RPattern p = make_pattern(4, 3, {{1, 2, 3, 3}});
    CHECK(pattern_weight(p, w) == doctest::Approx(1.0 / 128).epsilon(1e-14));

    // Weight of an edge the pattern lacks contributes nothing.
    CHECK(pattern_weight(make_pattern(3, 3, {}), u3) == 0.0);
}

TEST_CASE("pattern weight is symmetric under vertex relabeling") {
    Rng rng(2024);
    RPattern p = make_pattern(3, 4, {{1, 1, 2}, {2, 3, 4}, {1, 3, 3}});
    RPattern q = make_pattern(3, 4, {{4, 4, 3}, {3, 2, 1}, {4, 2, 2}});  // relabel v -> 5-v
    for (int trial = 0; trial < 25; ++trial) {
        auto w = rng.next_simplex_point(4);
        std::vector<double> rev(w.rbegin(), w.rend());
        CHECK(pattern_weight(p, std::span<const double>(w)) ==
              doctest::Approx(pattern_weight(q, std::span<const double>(rev))).epsilon(1e-12));
    }
}

TEST_CASE("weighting validation") {
    CHECK_THROWS_AS(Weighting({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({-0.1, 1.1}), std::invalid_argument);
    Weighting w = Weighting::normalized({2.0, 1.0, 1.0});
    CHECK(w.weight(1) == doctest::Approx(0.5));
    CHECK(w.size() == 3);
    Weighting u = Weighting::uniform(4);
    double tot = 0.0;
    for (double v : u.values()) tot += v;
    CHECK(tot == doctest::Approx(1.0).epsilon(1e-15));
    // Negative inputs clamp to zero before rescaling.
    Weighting c = Weighting::normalized({-1.0, 1.0, 3.0});
    CHECK(c.weight(1) == 0.0);
    CHECK(c.weight(3) == doctest::Approx(0.75));
}

TEST_CASE("binomial and rational helpers") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4).num() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(1, 3).to_string() == "1/3");
}
