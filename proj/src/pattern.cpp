#include "hjump/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hjump {

namespace {

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

Edge Edge::from_vertices(std::span<const Vertex> vs) {
    std::map<Vertex, int> mult;
    for (Vertex v : vs) ++mult[v];
    Edge e;
    e.items_.assign(mult.begin(), mult.end());
    return e;
}

Edge Edge::from_vertices(std::initializer_list<Vertex> vs) {
    return from_vertices(std::span<const Vertex>(vs.begin(), vs.size()));
}

int Edge::multiplicity(Vertex v) const {
    for (const auto& [u, m] : items_)
        if (u == v) return m;
    return 0;
}

int Edge::total_multiplicity() const {
    int t = 0;
    for (const auto& [u, m] : items_) t += m;
    return t;
}

bool Edge::simple() const {
    for (const auto& [u, m] : items_)
        if (m > 1) return false;
    return true;
}

std::vector<Vertex> Edge::to_vertices() const {
    std::vector<Vertex> out;
    for (const auto& [u, m] : items_)
        out.insert(out.end(), m, u);
    return out;
}

std::string Edge::to_string() const {
    std::string s;
    for (Vertex v : to_vertices()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

RPattern make_pattern(int r, int n, const std::vector<std::vector<Vertex>>& edges) {
    if (r < 2) throw std::invalid_argument("pattern uniformity must be at least 2");
    if (n < 1) throw std::invalid_argument("pattern needs at least one vertex");
    RPattern p;
    p.r_ = r;
    p.n_ = n;
    p.edges_.reserve(edges.size());
    for (const auto& raw : edges) {
        if (static_cast<int>(raw.size()) != r)
            throw std::invalid_argument("edge multiplicity " + std::to_string(raw.size()) +
                                        " != r=" + std::to_string(r));
        for (Vertex v : raw)
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
        p.edges_.push_back(Edge::from_vertices(raw));
    }
    std::sort(p.edges_.begin(), p.edges_.end());
    p.edges_.erase(std::unique(p.edges_.begin(), p.edges_.end()), p.edges_.end());
    return p;
}

bool RPattern::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool RPattern::simple() const {
    for (const Edge& e : edges_)
        if (!e.simple()) return false;
    return true;
}

bool is_simple(const RPattern& p) { return p.simple(); }

RGraph::RGraph(RPattern p) : p_(std::move(p)) {
    if (!p_.simple())
        throw std::invalid_argument("r-graph constructed from pattern with repeated vertices");
}

namespace {

void check_spec(const RPattern& p, const BlowupSpec& spec) {
    if (static_cast<int>(spec.copies.size()) != p.order())
        throw std::invalid_argument("blow-up spec indexes " +
                                    std::to_string(spec.copies.size()) + " vertices, pattern has " +
                                    std::to_string(p.order()));
    for (int k : spec.copies)
        if (k < 1) throw std::invalid_argument("blow-up copy counts must be at least 1");
}

// Flattened index of copy i (1-based) of source v given per-vertex offsets.
struct Flattening {
    std::vector<int> offset;  // offset[v-1] = index before (v,1)
    std::vector<BlowupOrigin> origin;
    int total = 0;
};

Flattening flatten(const RPattern& p, const BlowupSpec& spec) {
    Flattening fl;
    fl.offset.resize(p.order());
    for (Vertex v = 1; v <= p.order(); ++v) {
        fl.offset[v - 1] = fl.total;
        fl.total += spec.copies[v - 1];
        for (int i = 1; i <= spec.copies[v - 1]; ++i)
            fl.origin.push_back({v, i});
    }
    return fl;
}

// Multisets (simple_only=false) or subsets (simple_only=true) of size m over
// copies 1..k, as sorted copy-index lists.
void enumerate_lifts(int k, int m, bool simple_only, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c <= k; ++c) {
            cur.push_back(c);
            self(self, simple_only ? c + 1 : c, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, m);
}

std::vector<Edge> blow_up_edges(const RPattern& p, const BlowupSpec& spec,
                                const Flattening& fl, bool simple_only) {
    std::vector<Edge> out;
    std::vector<std::vector<std::vector<int>>> lifts_per_item;
    for (const Edge& e : p.edges()) {
        lifts_per_item.clear();
        lifts_per_item.resize(e.items().size());
        bool feasible = true;
        for (std::size_t i = 0; i < e.items().size(); ++i) {
            auto [v, m] = e.items()[i];
            enumerate_lifts(spec.copies[v - 1], m, simple_only, lifts_per_item[i]);
            if (lifts_per_item[i].empty()) feasible = false;
        }
        if (!feasible) continue;  // simple lift impossible when m > k_v
        std::vector<std::size_t> pick(e.items().size(), 0);
        std::vector<Vertex> verts;
        for (;;) {
            verts.clear();
            for (std::size_t i = 0; i < e.items().size(); ++i) {
                Vertex v = e.items()[i].first;
                for (int copy : lifts_per_item[i][pick[i]])
                    verts.push_back(fl.offset[v - 1] + copy);
            }
            out.push_back(Edge::from_vertices(verts));
            std::size_t j = 0;
            while (j < pick.size() && ++pick[j] == lifts_per_item[j].size()) {
                pick[j] = 0;
                ++j;
            }
            if (j == pick.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RPattern from_edges(int r, int n, std::vector<Edge> edges) {
    std::vector<std::vector<Vertex>> raw;
    raw.reserve(edges.size());
    for (const Edge& e : edges) raw.push_back(e.to_vertices());
    return make_pattern(r, n, raw);
}

}  // namespace

BlownUpPattern blow_up(const RPattern& p, const BlowupSpec& spec) {
    check_spec(p, spec);
    Flattening fl = flatten(p, spec);
    BlownUpPattern out;
    out.pattern = from_edges(p.uniformity(), fl.total, blow_up_edges(p, spec, fl, false));
    out.origin = std::move(fl.origin);
    return out;
}

BlownUpGraph simple_blow_up(const RPattern& p, const BlowupSpec& spec) {
    check_spec(p, spec);
    Flattening fl = flatten(p, spec);
    BlownUpGraph out;
    out.graph = RGraph(from_edges(p.uniformity(), fl.total, blow_up_edges(p, spec, fl, true)));
    out.origin = std::move(fl.origin);
    return out;
}

RPattern induced_subpattern(const RPattern& p, const std::vector<Vertex>& s) {
    if (s.empty()) throw std::invalid_argument("induced subpattern on empty vertex set");
    std::vector<int> newindex(p.order() + 1, 0);
    Vertex prev = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Vertex v = s[i];
        if (v < 1 || v > p.order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(p.order()));
        if (v <= prev) throw std::invalid_argument("vertex subset must be sorted and duplicate-free");
        prev = v;
        newindex[v] = static_cast<int>(i) + 1;
    }
    std::vector<std::vector<Vertex>> kept;
    for (const Edge& e : p.edges()) {
        bool inside = true;
        for (const auto& [v, m] : e.items())
            if (newindex[v] == 0) { inside = false; break; }
        if (!inside) continue;
        std::vector<Vertex> verts;
        for (Vertex v : e.to_vertices()) verts.push_back(newindex[v]);
        kept.push_back(std::move(verts));
    }
    return make_pattern(p.uniformity(), static_cast<int>(s.size()), kept);
}

Rational density(const RGraph& g) {
    if (g.order() < g.uniformity())
        throw std::invalid_argument("density needs at least r vertices");
    return Rational(static_cast<long long>(g.edge_count()),
                    binomial(g.order(), g.uniformity()));
}

double edge_weight(const Edge& e, std::span<const double> w) {
    double acc = 1.0;
    for (const auto& [v, m] : e.items()) {
        double x = w[v - 1];
        for (int i = 0; i < m; ++i) acc *= x;
        acc /= factorial(m);
    }
    return acc;
}

double pattern_weight(const RPattern& p, std::span<const double> w) {
    if (static_cast<int>(w.size()) != p.order())
        throw std::invalid_argument("weighting has " + std::to_string(w.size()) +
                                    " entries, pattern has " + std::to_string(p.order()));
    double total = 0.0;
    for (const Edge& e : p.edges()) total += edge_weight(e, w);
    return total;
}

double pattern_weight(const RPattern& p, const Weighting& w) {
    return pattern_weight(p, std::span<const double>(w.values()));
}

Weighting::Weighting(std::vector<double> w) : w_(std::move(w)) {
    double sum = 0.0;
    for (double x : w_) {
        if (!(x >= 0.0)) throw std::invalid_argument("weighting entries must be nonnegative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weighting sums to " + std::to_string(sum) + ", expected 1");
}

Weighting Weighting::normalized(std::vector<double> w) {
    double sum = 0.0;
    for (double& x : w) {
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    if (sum <= 0.0) throw std::invalid_argument("cannot normalize an all-zero weighting");
    for (double& x : w) x /= sum;
    // nudge the largest entry so the total is exactly representable as 1
    double resid = 1.0;
    for (double x : w) resid -= x;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[imax]) imax = i;
    w[imax] += resid;
    Weighting out;
    out.w_ = std::move(w);
    return out;
}

Weighting Weighting::uniform(int n) {
    if (n < 1) throw std::invalid_argument("uniform weighting needs n >= 1");
    return normalized(std::vector<double>(n, 1.0));
}

}  // namespace hjump
