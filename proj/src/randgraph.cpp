#include "hjump/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <unordered_map>

#include "hjump/errors.hpp"
#include "hjump/parallel.hpp"
#include "hjump/rng.hpp"

namespace hjump {

namespace {

double factorial_d(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// One byte per vertex, so the subset machinery covers t <= 255 and r <= 8.
std::uint64_t pack_edge(const std::vector<Vertex>& sorted_vs) {
    std::uint64_t key = 0;
    for (Vertex v : sorted_vs) key = (key << 8) | static_cast<std::uint64_t>(v);
    return key;
}

void check_packable(int t, int r) {
    if (t > 255 || r > 8)
        throw std::invalid_argument(
            "subset verification supports at most 255 vertices and uniformity 8");
}

template <class F>
void for_each_combination(int lo, int hi, int k, std::vector<Vertex>& buf, F&& fn) {
    if (k == 0) {
        fn(buf);
        return;
    }
    for (int v = lo; v <= hi - k + 1; ++v) {
        buf.push_back(v);
        for_each_combination(v + 1, hi, k - 1, buf, fn);
        buf.pop_back();
    }
}

std::unordered_set<std::uint64_t> edge_key_set(const RGraph& g) {
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(g.edge_count() * 2);
    for (const Edge& e : g.pattern().edges()) keys.insert(pack_edge(e.to_vertices()));
    return keys;
}

// Sizes s in [r, m] that can hold s - r + 2 edges at all.
std::vector<int> bad_candidate_sizes(int r, int m, int t) {
    std::vector<int> sizes;
    for (int s = r; s <= std::min(m, t); ++s)
        if (binom_ll(s, r) >= s - r + 2) sizes.push_back(s);
    return sizes;
}

}  // namespace

std::vector<std::vector<Vertex>> find_bad_sets(const RGraph& g, int m, int threads,
                                               long long op_budget) {
    const int r = g.uniformity();
    const int t = g.order();
    if (m < r) throw std::invalid_argument("locality bound m must be at least r");
    check_packable(t, r);

    auto sizes = bad_candidate_sizes(r, m, t);
    __int128 ops = 0;
    for (int s : sizes) {
        __int128 per = 1;
        for (int i = 1; i <= s; ++i) per = per * (t - s + i) / i;
        ops += per * binom_ll(s, r);
    }
    if (ops > op_budget)
        throw BudgetError("bad-set enumeration", ops > (__int128)std::numeric_limits<long long>::max()
                                                     ? std::numeric_limits<long long>::max()
                                                     : static_cast<long long>(ops),
                          op_budget);
    if (sizes.empty() || g.edge_count() < 2) return {};

    auto keys = edge_key_set(g);
    std::vector<std::vector<std::vector<Vertex>>> per_lead(t);
    parallel_for_index(static_cast<std::size_t>(t), threads, [&](std::size_t slot) {
        const Vertex lead = static_cast<Vertex>(slot) + 1;
        std::vector<Vertex> buf, sub;
        buf.reserve(m);
        sub.reserve(r);
        for (int s : sizes) {
            buf.assign(1, lead);
            for_each_combination(lead + 1, t, s - 1, buf, [&](const std::vector<Vertex>& set) {
                const int need = s - r + 2;
                int count = 0;
                sub.clear();
                for_each_combination(0, s - 1, r, sub, [&](const std::vector<Vertex>& ix) {
                    if (count >= need) return;
                    std::vector<Vertex> e(r);
                    for (int i = 0; i < r; ++i) e[i] = set[ix[i]];
                    if (keys.count(pack_edge(e))) ++count;
                });
                if (count >= need) per_lead[slot].push_back(set);
            });
        }
    });

    std::vector<std::vector<Vertex>> out;
    for (auto& chunk : per_lead)
        for (auto& s : chunk) out.push_back(std::move(s));
    return out;
}

bool verify_sparse_property(const RGraph& g, int m, int threads, long long op_budget) {
    return find_bad_sets(g, m, threads, op_budget).empty();
}

SparseGraphReport sample_sparse_graph(int r, int m, double c, int t, std::uint64_t seed,
                                      int max_retries, long long op_budget) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (t < r) throw std::invalid_argument("order t must be at least r");
    if (m < r) throw std::invalid_argument("locality bound m must be at least r");
    if (!(c > 0.0)) throw std::invalid_argument("density constant c must be positive");
    if (max_retries < 1) throw std::invalid_argument("need at least one sampling attempt");
    check_packable(t, r);
    const double p = 3.0 * (c / t) * factorial_d(r);
    if (p > 1.0)
        throw std::invalid_argument("sampling probability 3(c/t)r! = " + std::to_string(p) +
                                    " exceeds 1; lower c or raise t");
    const double target = c * std::pow(static_cast<double>(t), r - 1);

    SparseGraphReport rep;
    rep.r = r;
    rep.m = m;
    rep.t = t;
    rep.c = c;
    rep.p = p;
    rep.seed = seed;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<std::vector<Vertex>> edges;
        std::vector<Vertex> buf;
        for_each_combination(1, t, r, buf, [&](const std::vector<Vertex>& e) {
            if (rng.next_double() < p) edges.push_back(e);
        });
        rep.edges_before = static_cast<long long>(edges.size());

        RGraph raw(make_pattern(r, t, edges));
        auto bad = find_bad_sets(raw, m, 0, op_budget);
        rep.bad_sets_found = static_cast<long long>(bad.size());

        std::unordered_set<std::uint64_t> removed;
        std::vector<Vertex> sub;
        for (const auto& set : bad) {
            sub.clear();
            const int s = static_cast<int>(set.size());
            for_each_combination(0, s - 1, r, sub, [&](const std::vector<Vertex>& ix) {
                std::vector<Vertex> e(r);
                for (int i = 0; i < r; ++i) e[i] = set[ix[i]];
                removed.insert(pack_edge(e));
            });
        }
        std::vector<std::vector<Vertex>> kept;
        kept.reserve(edges.size());
        for (auto& e : edges)
            if (!removed.count(pack_edge(e))) kept.push_back(std::move(e));

        rep.graph = RGraph(make_pattern(r, t, kept));
        rep.edges_after = static_cast<long long>(rep.graph.edge_count());
        rep.verified = find_bad_sets(rep.graph, m, 0, op_budget).empty();
        rep.success = rep.verified && rep.edges_after >= target - 1e-9;
        rep.retries_used = attempt;
        if (rep.success) break;
    }
    return rep;
}

TheoremGraphReport build_theorem_graph(const RPattern& p, Vertex pivot, int m, double c, int t,
                                       std::uint64_t seed, const SolverConfig& cfg) {
    if (pivot < 1 || pivot > p.order())
        throw std::invalid_argument("pivot " + std::to_string(pivot) + " out of range 1.." +
                                    std::to_string(p.order()));
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const int r = p.uniformity();
    const int n = p.order();

    TheoremGraphReport rep;
    LagrangianResult lam = lagrangian_numeric(p, cfg);
    rep.lambda_p = lam.value;
    if (factorial_d(r) * lam.value >= 1.0)
        throw std::invalid_argument(
            "r!*lambda(P) must be below 1 for the composite construction");
    rep.pivot_weight = lam.witness.weight(pivot);

    BlowupSpec spec;
    spec.copies.assign(n, t);
    BlownUpGraph base = simple_blow_up(p, spec);

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(base.graph.edge_count());
    for (const Edge& e : base.graph.pattern().edges()) edges.push_back(e.to_vertices());

    if (t >= r) {
        rep.sparse = sample_sparse_graph(r, m, c, t, seed);
        if (!rep.sparse.success)
            throw std::runtime_error("sparse sampler failed after " +
                                     std::to_string(rep.sparse.retries_used + 1) +
                                     " attempts; raise t or lower c");
        const Vertex offset = (pivot - 1) * t;
        for (const Edge& e : rep.sparse.graph.pattern().edges()) {
            std::vector<Vertex> lifted = e.to_vertices();
            for (Vertex& v : lifted) v += offset;
            edges.push_back(std::move(lifted));
        }
    } else {
        // no room for any r-set among t copies; the planted part is empty
        rep.sparse.r = r;
        rep.sparse.m = m;
        rep.sparse.t = t;
        rep.sparse.c = c;
        rep.sparse.seed = seed;
        rep.sparse.verified = true;
        rep.sparse.success = true;
    }

    rep.graph = RGraph(make_pattern(r, n * t, edges));
    rep.weights.assign(static_cast<std::size_t>(n) * t, 0.0);
    for (Vertex u = 1; u <= n; ++u)
        for (int i = 0; i < t; ++i)
            rep.weights[static_cast<std::size_t>(u - 1) * t + i] = lam.witness.weight(u) / t;

    rep.base_value = pattern_weight(base.graph.pattern(), rep.weights);
    rep.value = pattern_weight(rep.graph.pattern(), rep.weights);
    rep.gain = rep.value - rep.base_value;
    rep.target_gain = (c / t) * std::pow(rep.pivot_weight, r);
    rep.gain_meets_target = rep.gain >= rep.target_gain - 1e-12;
    return rep;
}

namespace {

// Canonical form of a small edge list under vertex relabeling: the
// lexicographically least byte encoding over all permutations of 1..s.
std::string canonical_form(int s, int r, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i + 1;
    std::string best;
    std::vector<std::string> relabeled(edges.size());
    do {
        for (std::size_t k = 0; k < edges.size(); ++k) {
            std::string& enc = relabeled[k];
            enc.resize(r);
            for (int i = 0; i < r; ++i) enc[i] = static_cast<char>(perm[edges[k][i] - 1]);
            std::sort(enc.begin(), enc.end());
        }
        std::sort(relabeled.begin(), relabeled.end());
        std::string cat;
        cat.reserve(edges.size() * r);
        for (const auto& enc : relabeled) cat += enc;
        if (best.empty() || cat < best) best = std::move(cat);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

SubgraphBoundReport check_small_subgraph_bound(const RGraph& g, const RPattern& p, Vertex pivot,
                                               int m, const SolverConfig& cfg,
                                               long long sample_cap, long long op_budget) {
    const int r = g.uniformity();
    if (r != p.uniformity())
        throw std::invalid_argument("graph and pattern uniformity differ");
    if (pivot < 1 || pivot > p.order())
        throw std::invalid_argument("pivot " + std::to_string(pivot) + " out of range 1.." +
                                    std::to_string(p.order()));
    if (m < r) throw std::invalid_argument("subset bound m must be at least r");
    const int N = g.order();
    if (N > 64)
        throw std::invalid_argument("subset scan supports at most 64 vertices");

    SubgraphBoundReport rep;
    rep.m = m;
    rep.bound = factorial_d(r) * lagrangian_numeric(p, cfg).value + 1e-6;

    std::vector<std::uint64_t> edge_masks;
    std::vector<const Edge*> edge_ptrs;
    edge_masks.reserve(g.edge_count());
    for (const Edge& e : g.pattern().edges()) {
        std::uint64_t msk = 0;
        for (const auto& [v, mm] : e.items()) msk |= 1ull << (v - 1);
        edge_masks.push_back(msk);
        edge_ptrs.push_back(&e);
    }

    __int128 subsets_total = 0;
    for (int s = r; s <= std::min(m, N); ++s) {
        __int128 per = 1;
        for (int i = 1; i <= s; ++i) per = per * (N - s + i) / i;
        subsets_total += per;
    }
    rep.exhaustive =
        subsets_total * static_cast<__int128>(std::max<std::size_t>(g.edge_count(), 1)) <=
        op_budget;

    const double single_edge = factorial_d(r) / std::pow(static_cast<double>(r), r);
    std::unordered_map<std::string, double> cache;
    SolverConfig sub_cfg = cfg;
    sub_cfg.restarts = std::min(cfg.restarts, 60);

    auto consider = [&](const std::vector<Vertex>& set) {
        ++rep.subsets_checked;
        std::uint64_t ms = 0;
        for (Vertex v : set) ms |= 1ull << (v - 1);
        std::vector<std::size_t> inside;
        for (std::size_t k = 0; k < edge_masks.size(); ++k)
            if ((edge_masks[k] & ~ms) == 0) inside.push_back(k);
        double scaled = 0.0;
        if (inside.empty()) {
            scaled = 0.0;
        } else if (inside.size() == 1) {
            scaled = single_edge;
        } else {
            const int s = static_cast<int>(set.size());
            std::vector<Vertex> local(N + 1, 0);
            for (int i = 0; i < s; ++i) local[set[i]] = i + 1;
            std::vector<std::vector<Vertex>> rel;
            rel.reserve(inside.size());
            for (std::size_t k : inside) {
                std::vector<Vertex> e = edge_ptrs[k]->to_vertices();
                for (Vertex& v : e) v = local[v];
                std::sort(e.begin(), e.end());
                rel.push_back(std::move(e));
            }
            std::string key = canonical_form(s, r, rel);
            auto it = cache.find(key);
            if (it == cache.end()) {
                double lam = lagrangian_numeric(make_pattern(r, s, rel), sub_cfg).value;
                it = cache.emplace(std::move(key), lam).first;
                ++rep.solver_calls;
            }
            scaled = factorial_d(r) * it->second;
        }
        if (scaled > rep.max_scaled) {
            rep.max_scaled = scaled;
            rep.argmax = set;
        }
    };

    if (rep.exhaustive) {
        std::vector<Vertex> buf;
        for (int s = r; s <= std::min(m, N); ++s) for_each_combination(1, N, s, buf, consider);
    } else {
        Rng rng(derive_seed(cfg.seed, 0xbadc0de));
        std::vector<Vertex> all(N);
        for (int i = 0; i < N; ++i) all[i] = i + 1;
        for (long long it = 0; it < sample_cap; ++it) {
            int span = std::min(m, N) - r + 1;
            int s = r + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(span));
            for (int i = 0; i < s; ++i) {
                int j = i + static_cast<int>(rng.next_u64() %
                                             static_cast<std::uint64_t>(N - i));
                std::swap(all[i], all[j]);
            }
            std::vector<Vertex> set(all.begin(), all.begin() + s);
            std::sort(set.begin(), set.end());
            consider(set);
        }
    }
    rep.within_bound = rep.max_scaled <= rep.bound;
    return rep;
}

}  // namespace hjump
