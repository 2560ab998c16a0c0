#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hjump/frankl_rodl.hpp"
#include "hjump/lagrangian.hpp"
#include "hjump/pattern.hpp"
#include "hjump/rng.hpp"

using namespace hjump;

namespace {

SolverConfig quick_cfg(int restarts, std::uint64_t seed = 12345) {
    SolverConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
}

RPattern theorem_r3_pattern() {
    return make_pattern(3, 4, {{1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 2, 3}, {1, 3, 4}, {2, 3, 4}});
}

RPattern random_pattern(Rng& rng, int r, int max_n, int max_edges) {
    int n = 2 + static_cast<int>(rng.next_u64() % (max_n - 1));
    int m = 1 + static_cast<int>(rng.next_u64() % max_edges);
    std::vector<std::vector<Vertex>> edges;
    for (int e = 0; e < m; ++e) {
        std::vector<Vertex> edge;
        for (int i = 0; i < r; ++i)
            edge.push_back(1 + static_cast<int>(rng.next_u64() % n));
        edges.push_back(std::move(edge));
    }
    return make_pattern(r, n, edges);
}

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("construction shape on the r=3 fixture") {
    FrPattern fr = fr_construction(theorem_r3_pattern(), 2);
    CHECK(fr.pattern.uniformity() == 3);
    CHECK(fr.pattern.order() == 6);
    CHECK(fr.pattern.edge_count() == 14);
    CHECK(fr.pivot == 2);
    CHECK(fr.pivot_copies == std::vector<Vertex>{2, 3, 4});
    CHECK(fr.pattern.contains(Edge::from_vertices({2, 3, 4})));
    REQUIRE(fr.origin.size() == 6);
    CHECK(fr.origin[0].source == 1);
    CHECK(fr.origin[1].source == 2);
    CHECK(fr.origin[1].copy == 1);
    CHECK(fr.origin[3].copy == 3);
    CHECK(fr.origin[4].source == 3);
}

TEST_CASE("construction shape on the r=4 fixture") {
    FrPattern fr = fr_construction(make_pattern(4, 3, {{1, 2, 3, 3}}), 3);
    CHECK(fr.pattern.order() == 6);
    CHECK(fr.pattern.edge_count() == 8);
    CHECK(fr.pivot_copies == std::vector<Vertex>{3, 4, 5, 6});
    CHECK(fr.pattern.contains(Edge::from_vertices({3, 4, 5, 6})));
    // The double-pivot edge survives only through copy 1.
    CHECK(fr.pattern.contains(Edge::from_vertices({1, 2, 3, 3})));
    CHECK_FALSE(fr.pattern.contains(Edge::from_vertices({1, 2, 4, 4})));
}

TEST_CASE("construction invariants on random patterns") {
    Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int r = 2 + static_cast<int>(rng.next_u64() % 3);
        RPattern p = random_pattern(rng, r, 5, 6);
        Vertex pivot = 1 + static_cast<int>(rng.next_u64() % p.order());
        FrPattern fr = fr_construction(p, pivot);
        CHECK(fr.pattern.order() == p.order() + r - 1);
        CHECK(static_cast<int>(fr.pivot_copies.size()) == r);

        // Copies 2..r never carry multiplicity above one.
        for (const Edge& e : fr.pattern.edges())
            for (auto [v, m] : e.items()) {
                const BlowupOrigin& o = fr.origin[v - 1];
                if (o.source == pivot && o.copy >= 2) CHECK(m == 1);
            }

        // Exactly one edge lives entirely on the pivot copies.
        int inside = 0;
        for (const Edge& e : fr.pattern.edges()) {
            bool all = true;
            for (auto [v, m] : e.items())
                if (fr.origin[v - 1].source != pivot) all = false;
            inside += all;
        }
        CHECK(inside == 1);
    }
    CHECK_THROWS_AS(fr_construction(theorem_r3_pattern(), 0), std::invalid_argument);
    CHECK_THROWS_AS(fr_construction(theorem_r3_pattern(), 5), std::invalid_argument);
}

TEST_CASE("construction never lowers the lagrangian") {
    Rng rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        RPattern p = random_pattern(rng, 3, 4, 5);
        Vertex pivot = 1 + static_cast<int>(rng.next_u64() % p.order());
        FrPattern fr = fr_construction(p, pivot);
        auto lp = lagrangian_numeric(p, quick_cfg(20, 400 + trial));
        auto lf = lagrangian_numeric(fr.pattern, quick_cfg(20, 500 + trial));
        CHECK(lf.value >= lp.value - 1e-9);
    }
}

TEST_CASE("on simple patterns the copies edge forces a strict gain") {
    RPattern k3 = make_pattern(3, 3, {{1, 2, 3}});
    auto lp = lagrangian_numeric(k3, quick_cfg(20));
    Weighting w = lp.witness;
    FrPattern fr = fr_construction(k3, 1);
    auto lf = lagrangian_numeric(fr.pattern, quick_cfg(30));
    double gain = std::pow(w.weight(1) / 3.0, 3);
    CHECK(lf.value >= lp.value + gain - 1e-9);
}

TEST_CASE("multiplicity condition") {
    RPattern p = make_pattern(3, 3, {{1, 1, 2}, {1, 2, 3}, {2, 2, 3}});
    CHECK(check_multiplicity_condition(p, 1));
    CHECK(check_multiplicity_condition(p, 2));
    CHECK_FALSE(check_multiplicity_condition(p, 3));
    CHECK_THROWS_AS(check_multiplicity_condition(p, 4), std::invalid_argument);
}

TEST_CASE("certificate passes on the r=3 fixture") {
    CertificateReport rep = check_nonjump_certificate(theorem_r3_pattern(), 2, quick_cfg(60));
    CHECK(rep.pass);
    CHECK(rep.reasons.empty());
    CHECK(rep.certified);
    CHECK(rep.multiplicity_ok);
    CHECK(rep.scaled_below_one);
    CHECK(rep.pivot_witness_positive);
    CHECK(rep.pivot_weight > 0.1);
    CHECK(rep.alpha == doctest::Approx(6.0 / 121.0 * (5.0 * std::sqrt(5.0) - 2.0)).epsilon(1e-10));
    CHECK(std::abs(rep.gap) <= rep.tol);
    CHECK(rep.alpha >= limitation_bound(3) - 1e-9);
    CHECK(rep.fr.pattern.order() == 6);
}

TEST_CASE("certificate fails on a simple pattern with reasons") {
    RPattern k3 = make_pattern(3, 3, {{1, 2, 3}});
    CertificateReport rep = check_nonjump_certificate(k3, 1, quick_cfg(30));
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.multiplicity_ok);
    CHECK(rep.scaled_below_one);  // 6/27 < 1
    REQUIRE(!rep.reasons.empty());
    bool mentions_multiplicity = false;
    bool mentions_gap = false;
    for (const auto& r : rep.reasons) {
        if (r.find("multiplicity") != std::string::npos) mentions_multiplicity = true;
        if (r.find("exceeds tolerance") != std::string::npos) mentions_gap = true;
    }
    CHECK(mentions_multiplicity);
    CHECK(mentions_gap);
}

TEST_CASE("certificate rejects a pattern whose scaled lagrangian reaches one") {
    RPattern loop = make_pattern(2, 1, {{1, 1}});
    CertificateReport rep = check_nonjump_certificate(loop, 1, quick_cfg(10));
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.scaled_below_one);
    CHECK(rep.multiplicity_ok);
}

TEST_CASE("certificate validates inputs") {
    CHECK_THROWS_AS(check_nonjump_certificate(theorem_r3_pattern(), 9, quick_cfg(10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_nonjump_certificate(theorem_r3_pattern(), 1, quick_cfg(10), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_nonjump_certificate(theorem_r3_pattern(), 1, quick_cfg(0)),
                    std::invalid_argument);
}

TEST_CASE("limitation bound") {
    CHECK(limitation_bound(3) ==
          doctest::Approx(6.0 / 121.0 * (5.0 * std::sqrt(5.0) - 2.0)).epsilon(1e-15));
    CHECK(limitation_bound(4) == 0.1875);
    CHECK(limitation_bound(5) == doctest::Approx(2.0 * 120.0 / 3125.0).epsilon(1e-15));
    for (int r = 4; r <= 8; ++r)
        CHECK(limitation_bound(r) ==
              doctest::Approx(2.0 * factorial(r) / std::pow(r, r)).epsilon(1e-12));
    CHECK_THROWS_AS(limitation_bound(2), std::invalid_argument);
}

TEST_CASE("scaling a non-jump between uniformities") {
    CHECK(scale_nonjump(3, 3, 0.6) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(scale_nonjump(4, 5, 0.1875) == doctest::Approx(0.0768).epsilon(1e-12));
    CHECK(scale_nonjump(3, 4, 12.0 / 25.0) == doctest::Approx(0.2025).epsilon(1e-12));
    // The family 2 r!/r^r maps onto itself.
    for (int r = 3; r <= 6; ++r) {
        double alpha = 2.0 * factorial(r) / std::pow(r, r);
        double next = 2.0 * factorial(r + 1) / std::pow(r + 1, r + 1);
        CHECK(scale_nonjump(r, r + 1, alpha) == doctest::Approx(next).epsilon(1e-12));
    }
    CHECK_THROWS_AS(scale_nonjump(2, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(scale_nonjump(4, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(scale_nonjump(3, 4, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(scale_nonjump(3, 4, -0.1), std::invalid_argument);
}

TEST_CASE("single-edge weight lower bound") {
    RPattern p = make_pattern(4, 3, {{1, 2, 3, 3}});
    Edge e = Edge::from_vertices({1, 2, 3, 3});
    CHECK(edge_weight_lower_bound(p, e) == doctest::Approx(1.0 / 128).epsilon(1e-15));
    RPattern k3 = make_pattern(3, 3, {{1, 2, 3}});
    CHECK(edge_weight_lower_bound(k3, Edge::from_vertices({1, 2, 3})) ==
          doctest::Approx(1.0 / 27).epsilon(1e-15));
    CHECK_THROWS_AS(edge_weight_lower_bound(k3, Edge::from_vertices({1, 1, 2})),
                    std::invalid_argument);

    // The bound never beats the solver by more than its plateau-stop slack.
    // A loop edge puts the bound at an exact simplex corner, which the
    // ascent approaches but does not land on.
    Rng rng(64);
    for (int trial = 0; trial < 10; ++trial) {
        RPattern q = random_pattern(rng, 3, 5, 5);
        auto res = lagrangian_numeric(q, quick_cfg(20, 800 + trial));
        for (const Edge& edge : q.edges())
            CHECK(res.value >= edge_weight_lower_bound(q, edge) - 1e-8);
    }
}

TEST_CASE("cross-checked solve certifies small patterns") {
    RPattern p = make_pattern(4, 3, {{1, 2, 3, 3}});
    CrossCheckedLambda x = cross_checked_lambda(p, quick_cfg(30));
    CHECK(x.result.value == doctest::Approx(1.0 / 128).epsilon(1e-12));
    CHECK(x.enumerated);
    CHECK(x.certified);
    CHECK(std::abs(x.enum_value - x.result.value) <= 1e-6);
    CHECK(x.grid_value <= x.result.value + 1e-9);
    CHECK(x.grid_resolution > 0);
    CHECK(!x.points.empty());
}
