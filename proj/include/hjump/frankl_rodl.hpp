#ifndef HJUMP_FRANKL_RODL_HPP
#define HJUMP_FRANKL_RODL_HPP

#include <string>
#include <vector>

#include "hjump/lagrangian.hpp"
#include "hjump/pattern.hpp"

namespace hjump {

// Result of blowing a pivot vertex into r copies, filtering the lifted edges
// so copies 2..r appear at most once each, and adding the single simple edge
// on all r copies.
struct FrPattern {
    RPattern pattern;
    Vertex pivot = 1;                   // pivot in the source pattern
    std::vector<Vertex> pivot_copies;   // labels of (pivot, 1..r), ascending
    std::vector<BlowupOrigin> origin;   // new label - 1 -> (source vertex, copy)
};

FrPattern fr_construction(const RPattern& p, Vertex pivot);

// Numerical evidence that alpha = r! * lambda(P) is a non-jump density. The
// pass verdict needs four conditions: r!*lambda(P) < 1, a maximal weighting
// with positive pivot weight, lambda(FR) matching lambda(P) within tol, and
// some edge carrying the pivot with multiplicity >= 2. The >= direction of
// the lambda match holds exactly, so only the <= side is trusted numerically.
struct CertificateReport {
    RPattern pattern;
    Vertex pivot = 1;
    FrPattern fr;
    LagrangianResult lambda_p;
    LagrangianResult lambda_fr;
    double alpha = 0.0;                  // r! * lambda_p.value
    double gap = 0.0;                    // lambda_fr.value - lambda_p.value
    double tol = 1e-7;
    double pivot_weight = 0.0;           // best witness weight found at the pivot
    bool pivot_witness_positive = false;
    bool scaled_below_one = false;       // r! * lambda_p.value < 1
    bool multiplicity_ok = false;        // some edge has pivot multiplicity >= 2
    bool certified = false;              // both Lagrangians passed the cross-check stack
    bool pass = false;
    std::vector<std::string> reasons;    // empty on pass
};

CertificateReport check_nonjump_certificate(const RPattern& p, Vertex pivot,
                                            const SolverConfig& cfg = {}, double tol = 1e-7);

// True iff some edge of p contains the pivot with multiplicity at least two.
bool check_multiplicity_condition(const RPattern& p, Vertex pivot);

// Smallest density this certificate scheme can reach for r-graphs:
// (6/121)(5*sqrt(5)-2) when r = 3, and 2*r!/r^r for r >= 4.
double limitation_bound(int r);

// Transports a non-jump density for r-graphs to one for s-graphs, r <= s.
double scale_nonjump(int r, int s, double alpha);

// Certified lower bound on lambda(P): the weight of the single edge e under
// w(u) = m_e(u)/r, which equals prod_u (m_e(u)/r)^m_e(u) / m_e(u)!.
double edge_weight_lower_bound(const RPattern& p, const Edge& e);

// Full solve used by certificates: multistart ascent, cross-checked by
// support enumeration and a budgeted grid lower bound when the order allows.
struct CrossCheckedLambda {
    LagrangianResult result;
    bool enumerated = false;        // support enumeration ran (order <= 10)
    bool certified = false;         // enum agreed within 1e-6, grid within 1e-9
    double enum_value = 0.0;
    double grid_value = 0.0;
    int grid_resolution = 0;
    std::vector<StationaryPoint> points;
};

CrossCheckedLambda cross_checked_lambda(const RPattern& p, const SolverConfig& cfg);

}  // namespace hjump

#endif
