#include "hjump/frankl_rodl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hjump {

namespace {

double factorial_d(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

FrPattern fr_construction(const RPattern& p, Vertex pivot) {
    if (pivot < 1 || pivot > p.order())
        throw std::invalid_argument("pivot " + std::to_string(pivot) + " out of range 1.." +
                                    std::to_string(p.order()));
    const int r = p.uniformity();
    BlowupSpec spec;
    spec.copies.assign(p.order(), 1);
    spec.copies[pivot - 1] = r;
    BlownUpPattern blown = blow_up(p, spec);

    FrPattern out;
    out.pivot = pivot;
    out.origin = blown.origin;
    for (Vertex v = 1; v <= static_cast<Vertex>(blown.origin.size()); ++v)
        if (blown.origin[v - 1].source == pivot) out.pivot_copies.push_back(v);

    std::vector<std::vector<Vertex>> edges;
    for (const Edge& e : blown.pattern.edges()) {
        bool keep = true;
        for (const auto& [v, m] : e.items()) {
            const BlowupOrigin& o = blown.origin[v - 1];
            if (o.source == pivot && o.copy >= 2 && m > 1) {
                keep = false;
                break;
            }
        }
        if (keep) edges.push_back(e.to_vertices());
    }
    edges.push_back(out.pivot_copies);
    out.pattern = make_pattern(r, blown.pattern.order(), edges);
    return out;
}

bool check_multiplicity_condition(const RPattern& p, Vertex pivot) {
    if (pivot < 1 || pivot > p.order())
        throw std::invalid_argument("pivot " + std::to_string(pivot) + " out of range 1.." +
                                    std::to_string(p.order()));
    for (const Edge& e : p.edges())
        if (e.multiplicity(pivot) >= 2) return true;
    return false;
}

CrossCheckedLambda cross_checked_lambda(const RPattern& p, const SolverConfig& cfg) {
    CrossCheckedLambda out;
    out.result = lagrangian_numeric(p, cfg);

    const int n = p.order();
    const long long grid_points = 300000;
    int res = 1;
    if (n > 1) {
        auto count = [&](int N) -> long long {
            __int128 c = 1;
            for (int i = 1; i <= n - 1; ++i) {
                c = c * (N + i) / i;
                if (c > grid_points) return grid_points + 1;
            }
            return static_cast<long long>(c);
        };
        while (res < 2048 && count(res + 1) <= grid_points) ++res;
    }
    GridResult grid = lagrangian_grid_oracle(p, res, grid_points);
    out.grid_value = grid.value;
    out.grid_resolution = res;

    if (n <= 10) {
        SupportEnumResult se = lagrangian_support_enum(p, cfg, 10, out.result);
        out.enumerated = true;
        out.enum_value = se.best.value;
        out.points = std::move(se.points);
        if (se.best.value > out.result.value) out.result = se.best;
        out.certified = std::abs(out.enum_value - out.result.value) <= 1e-6 &&
                        out.grid_value <= out.result.value + 1e-9;
    } else {
        out.certified = false;
        if (out.grid_value > out.result.value + 1e-9) {
            // the coarse grid beat the ascent: keep the better lower bound
            LagrangianResult g;
            g.value = grid.value;
            g.witness = grid.argmax;
            g.converged = false;
            out.result = g;
        }
    }
    return out;
}

CertificateReport check_nonjump_certificate(const RPattern& p, Vertex pivot,
                                            const SolverConfig& cfg, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("certificate tolerance must be positive");
    validate(cfg);
    CertificateReport rep;
    rep.pattern = p;
    rep.pivot = pivot;
    rep.tol = tol;
    rep.fr = fr_construction(p, pivot);  // validates the pivot
    rep.multiplicity_ok = check_multiplicity_condition(p, pivot);

    CrossCheckedLambda sp = cross_checked_lambda(p, cfg);
    CrossCheckedLambda sf = cross_checked_lambda(rep.fr.pattern, cfg);
    rep.lambda_p = sp.result;
    rep.lambda_fr = sf.result;
    rep.certified = sp.certified && sf.certified;

    const int r = p.uniformity();
    rep.alpha = factorial_d(r) * rep.lambda_p.value;
    rep.gap = rep.lambda_fr.value - rep.lambda_p.value;
    rep.scaled_below_one = rep.alpha < 1.0;

    rep.pivot_weight = rep.lambda_p.witness.weight(pivot);
    rep.pivot_witness_positive = rep.pivot_weight > cfg.support_eps;
    if (!rep.pivot_witness_positive && sp.enumerated) {
        // the maximal weighting need not be unique; look for another
        // stationary point at the same value that keeps the pivot alive
        for (const StationaryPoint& pt : sp.points) {
            if (pt.value >= rep.lambda_p.value - 1e-9) {
                double wv = pt.witness.weight(pivot);
                if (wv > cfg.support_eps && wv > rep.pivot_weight) {
                    rep.pivot_weight = wv;
                    rep.pivot_witness_positive = true;
                }
            }
        }
    }

    if (!rep.scaled_below_one)
        rep.reasons.push_back("r!*lambda(P) = " + fmt(rep.alpha) + " is not below 1");
    if (!rep.pivot_witness_positive)
        rep.reasons.push_back("no maximal weighting with positive weight at pivot " +
                              std::to_string(pivot) + " was found");
    if (!(std::abs(rep.gap) <= tol))
        rep.reasons.push_back("|lambda(FR) - lambda(P)| = " + fmt(std::abs(rep.gap)) +
                              " exceeds tolerance " + fmt(tol));
    if (!rep.multiplicity_ok)
        rep.reasons.push_back("no edge contains pivot " + std::to_string(pivot) +
                              " with multiplicity >= 2");
    if (!rep.lambda_p.converged)
        rep.reasons.push_back("ascent did not converge while computing lambda(P)");
    if (!rep.lambda_fr.converged)
        rep.reasons.push_back("ascent did not converge while computing lambda(FR)");
    rep.pass = rep.reasons.empty();
    return rep;
}

double limitation_bound(int r) {
    if (r < 3) throw std::invalid_argument("limitation bound is defined for r >= 3");
    if (r == 3) return 6.0 / 121.0 * (5.0 * std::sqrt(5.0) - 2.0);
    double prod = 2.0;
    for (int i = 1; i <= r; ++i) prod *= static_cast<double>(i) / r;
    return prod;
}

double scale_nonjump(int r, int s, double alpha) {
    if (r < 3) throw std::invalid_argument("scaling requires r >= 3");
    if (s < r) throw std::invalid_argument("scaling requires r <= s");
    if (!(alpha >= 0.0) || alpha > 1.0 + 1e-12)
        throw std::invalid_argument("density must lie in [0, 1]");
    // recover the normalized alpha*r^r/r! form, then renormalize for s
    double raw = alpha;
    for (int i = 1; i <= r; ++i) raw *= static_cast<double>(r) / i;
    for (int i = 1; i <= s; ++i) raw *= static_cast<double>(i) / s;
    return raw;
}

double edge_weight_lower_bound(const RPattern& p, const Edge& e) {
    if (!p.contains(e))
        throw std::invalid_argument("edge " + e.to_string() + " is not in the pattern");
    double acc = 1.0;
    for (const auto& [v, m] : e.items()) {
        for (int i = 0; i < m; ++i) acc *= static_cast<double>(m) / p.uniformity();
        for (int i = 2; i <= m; ++i) acc /= i;
    }
    return acc;
}

}  // namespace hjump
