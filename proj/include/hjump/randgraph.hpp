#ifndef HJUMP_RANDGRAPH_HPP
#define HJUMP_RANDGRAPH_HPP

#include <cstdint>
#include <vector>

#include "hjump/lagrangian.hpp"
#include "hjump/pattern.hpp"

namespace hjump {

// A sampled locally-sparse, globally-dense r-graph on t vertices: every
// induced subgraph on s <= m vertices spans at most s - r + 1 edges, while
// the graph keeps at least c * t^(r-1) edges overall.
struct SparseGraphReport {
    RGraph graph;
    int r = 0;
    int m = 0;
    int t = 0;
    double c = 0.0;
    double p = 0.0;               // per-r-set sampling probability, 3(c/t)r!
    long long edges_before = 0;   // in the raw sample
    long long edges_after = 0;    // after deleting all bad-set edges
    long long bad_sets_found = 0;
    std::uint64_t seed = 0;
    int retries_used = 0;
    bool verified = false;        // exhaustive re-check found no bad set
    bool success = false;         // edges_after >= c * t^(r-1)
};

// Samples each r-set with probability p = 3(c/t)r!, deletes the edges of
// every bad set in one pass, re-verifies, and retries with a derived seed
// (at most max_retries attempts) until the edge-count target is met. A
// failing final attempt is returned with success = false, not thrown.
SparseGraphReport sample_sparse_graph(int r, int m, double c, int t, std::uint64_t seed,
                                      int max_retries = 20,
                                      long long op_budget = 100000000);

// All S with r <= |S| <= m inducing at least |S| - r + 2 edges, ordered by
// smallest element, then size, then lexicographically. Sizes whose maximum
// possible edge count C(s, r) stays below the threshold are skipped.
std::vector<std::vector<Vertex>> find_bad_sets(const RGraph& g, int m, int threads = 0,
                                               long long op_budget = 100000000);

bool verify_sparse_property(const RGraph& g, int m, int threads = 0,
                            long long op_budget = 100000000);

// The composite graph: a simple blow-up of P with t copies per vertex, plus
// a sampled sparse graph placed on the t copies of the pivot. The natural
// weighting w'((u,i)) = w(u)/t recovers the base pattern weight and gains
// roughly (c/t) * w(pivot)^r from the planted edges.
struct TheoremGraphReport {
    RGraph graph;
    SparseGraphReport sparse;
    std::vector<double> weights;    // w' over the composite vertex set
    double lambda_p = 0.0;
    double pivot_weight = 0.0;      // w(pivot) in the base witness
    double base_value = 0.0;        // w'(blow-up part) = w(P) up to roundoff
    double gain = 0.0;              // contribution of the planted edges
    double value = 0.0;             // w'(G) = base_value + gain
    double target_gain = 0.0;       // (c/t) * w(pivot)^r
    bool gain_meets_target = false;
};

TheoremGraphReport build_theorem_graph(const RPattern& p, Vertex pivot, int m, double c, int t,
                                       std::uint64_t seed, const SolverConfig& cfg = {});

// Scaled Lagrangian maximum over small vertex subsets of g: exhausts all S
// with |S| <= m when that fits the budget, otherwise samples. Isomorphic
// induced subgraphs share one numeric solve through a canonical-form cache.
struct SubgraphBoundReport {
    int m = 0;
    long long subsets_checked = 0;
    bool exhaustive = false;
    long long solver_calls = 0;     // distinct canonical forms solved
    double max_scaled = 0.0;        // max over S of r! * lambda(g[S])
    std::vector<Vertex> argmax;
    double bound = 0.0;             // r! * lambda(p) + slack
    bool within_bound = false;
};

SubgraphBoundReport check_small_subgraph_bound(const RGraph& g, const RPattern& p, Vertex pivot,
                                               int m, const SolverConfig& cfg = {},
                                               long long sample_cap = 20000,
                                               long long op_budget = 500000000);

}  // namespace hjump

#endif
