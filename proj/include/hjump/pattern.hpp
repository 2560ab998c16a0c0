#ifndef HJUMP_PATTERN_HPP
#define HJUMP_PATTERN_HPP

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hjump/rational.hpp"

namespace hjump {

// Vertices are 1-based indices into 1..n, matching the file formats.
using Vertex = int;

// A size-r multiset edge, stored canonically as a sorted
// (vertex, multiplicity) map. {1,2,2} and {2,1,2} are the same edge.
class Edge {
public:
    Edge() = default;
    static Edge from_vertices(std::span<const Vertex> vs);
    static Edge from_vertices(std::initializer_list<Vertex> vs);

    const std::vector<std::pair<Vertex, int>>& items() const { return items_; }
    int multiplicity(Vertex v) const;
    int total_multiplicity() const;
    Vertex max_vertex() const { return items_.empty() ? 0 : items_.back().first; }
    bool simple() const;

    // Expanded sorted vertex list with repetition, e.g. {1,2,2}.
    std::vector<Vertex> to_vertices() const;
    std::string to_string() const;

    auto operator<=>(const Edge&) const = default;

private:
    std::vector<std::pair<Vertex, int>> items_;
};

// An r-pattern: vertex set {1..n} plus a duplicate-free, sorted set of
// multiset edges of total multiplicity r each.
class RPattern {
public:
    RPattern() = default;

    int uniformity() const { return r_; }
    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains(const Edge& e) const;
    bool simple() const;

    friend RPattern make_pattern(int r, int n,
                                 const std::vector<std::vector<Vertex>>& edges);

private:
    int r_ = 0;
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Validates r >= 2, n >= 1, every edge a size-r multiset over 1..n.
// Duplicate input edges collapse silently.
RPattern make_pattern(int r, int n, const std::vector<std::vector<Vertex>>& edges);

bool is_simple(const RPattern& p);

// An r-graph: an r-pattern whose edges are all multiplicity-free.
class RGraph {
public:
    RGraph() = default;
    explicit RGraph(RPattern p);

    const RPattern& pattern() const { return p_; }
    int uniformity() const { return p_.uniformity(); }
    int order() const { return p_.order(); }
    std::size_t edge_count() const { return p_.edge_count(); }

private:
    RPattern p_;
};

// Copy counts per source vertex; all entries >= 1, indexed by v-1.
struct BlowupSpec {
    std::vector<int> copies;
};

// Where a blow-up vertex came from: copy `copy` (1-based) of `source`.
struct BlowupOrigin {
    Vertex source = 0;
    int copy = 0;
};

struct BlownUpPattern {
    RPattern pattern;
    std::vector<BlowupOrigin> origin;  // origin[v-1] for new vertex v
};

struct BlownUpGraph {
    RGraph graph;
    std::vector<BlowupOrigin> origin;
};

// P(k): vertex (v,i) for i in 1..k_v, flattened in source order; an edge for
// every lift of a pattern edge whose projection back onto V(P) is that edge.
BlownUpPattern blow_up(const RPattern& p, const BlowupSpec& spec);

// [[P(k)]]: only the multiplicity-free lifts, yielding an r-graph. A pattern
// edge e contributes prod_v C(k_v, m_e(v)) simple edges.
BlownUpGraph simple_blow_up(const RPattern& p, const BlowupSpec& spec);

// Pattern induced on the sorted vertex subset `s` (edges entirely inside s),
// reindexed to 1..|s|.
RPattern induced_subpattern(const RPattern& p, const std::vector<Vertex>& s);

// |E| / C(n, r), exact.
Rational density(const RGraph& g);

// w(e) = prod_v w(v)^{m_e(v)} / m_e(v)!  with w indexed by v-1.
double edge_weight(const Edge& e, std::span<const double> w);

// w(P) = sum over edges of edge_weight.
double pattern_weight(const RPattern& p, std::span<const double> w);

// Normalized nonnegative weighting on 1..n.
class Weighting {
public:
    Weighting() = default;
    // Requires entries >= 0 and sum within 1e-12 of 1.
    explicit Weighting(std::vector<double> w);
    // Clamps negatives to zero and rescales to sum 1.
    static Weighting normalized(std::vector<double> w);
    static Weighting uniform(int n);

    int size() const { return static_cast<int>(w_.size()); }
    double weight(Vertex v) const { return w_[v - 1]; }
    const std::vector<double>& values() const { return w_; }

private:
    std::vector<double> w_;
};

double pattern_weight(const RPattern& p, const Weighting& w);

}  // namespace hjump

#endif
