#ifndef HJUMP_LAGRANGIAN_HPP
#define HJUMP_LAGRANGIAN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hjump/pattern.hpp"

namespace hjump {

struct SolverConfig {
    int restarts = 200;
    long long max_iters = 100000;
    double move_tol = 1e-14;        // per-iteration movement stopping threshold
    double support_eps = 1e-9;      // weights below this count as zero support
    std::uint64_t seed = 12345;
    int threads = 0;                // 0 = all hardware threads
    long long grid_budget = 20000000;  // max grid points per oracle call
};

void validate(const SolverConfig& cfg);

// Gradient and Hessian of w(P) as a polynomial in the weights; both are
// zero-safe on the boundary of the simplex.
std::vector<double> grad(const RPattern& p, std::span<const double> w);
std::vector<std::vector<double>> hessian(const RPattern& p, std::span<const double> w);

enum class Classification { interior_stationary, boundary, grid_lower_bound };

struct LagrangianResult {
    double value = 0.0;
    Weighting witness;
    double residual = 0.0;          // max pairwise gap of support partials
    std::vector<Vertex> support;    // vertices with weight > support_eps
    int restarts_used = 0;
    Classification classification = Classification::boundary;
    bool converged = true;          // movement tolerance reached before max_iters
};

// Multi-start multiplicative ascent w <- w * grad / (r f). The update keeps
// the iterate on the simplex (Euler identity) and increases w(P); a projected
// gradient step substitutes whenever f = 0. Deterministic for a fixed seed
// regardless of the thread count.
LagrangianResult lagrangian_numeric(const RPattern& p, const SolverConfig& cfg = {});

struct GridResult {
    double value = 0.0;
    Weighting argmax;
    long long points = 0;
    int resolution = 0;
};

// Exhaustive max of w(P) over all weightings with coordinates i/resolution.
// Throws BudgetError before enumerating if the composition count exceeds
// cfg-style budget. A lower bound for the Lagrangian.
GridResult lagrangian_grid_oracle(const RPattern& p, int resolution,
                                  long long budget = SolverConfig{}.grid_budget);

enum class StationaryKind { local_max, saddle, degenerate };

struct StationaryPoint {
    std::vector<Vertex> support;
    Weighting witness;              // zero off the support
    double value = 0.0;
    bool interior = false;          // support == V(P)
    StationaryKind kind = StationaryKind::degenerate;
    double reduced_hessian_det = 0.0;
    bool newton_converged = true;   // false: located by fallback ascent
};

struct SupportEnumResult {
    LagrangianResult best;
    std::vector<StationaryPoint> points;
    int newton_failures = 0;
};

// Solves the equal-partial-derivative stationarity system on the relative
// interior of every support face (damped Newton, seeded from the barycenter,
// the numeric witness and two random points). Stationary points are
// classified by the face-reduced Hessian, eliminating the largest-weight
// variable. Ties between supports prefer larger value, then smaller support,
// then lexicographic order.
SupportEnumResult lagrangian_support_enum(const RPattern& p, const SolverConfig& cfg = {},
                                          int max_n = 10);

// Same, reusing an already computed multistart result as the baseline.
SupportEnumResult lagrangian_support_enum(const RPattern& p, const SolverConfig& cfg, int max_n,
                                          const LagrangianResult& baseline);

// First-order maximality test on the simplex: support partials agree within
// tol, no zero-weight vertex has a larger partial, and the value is positive
// when the pattern has edges (a maximizer of a nonempty pattern cannot sit
// at value zero).
bool verify_kkt(const RPattern& p, const Weighting& w, double tol);

struct BlowupSearchResult {
    BlowupSpec spec;
    Rational density;
};

// Best simple blow-up of order n found by rounding the numeric witness to a
// copy vector and hill-climbing +1/-1 exchanges on the exact edge count.
BlowupSearchResult best_blowup_density(const RGraph& g, int n, const SolverConfig& cfg = {});

}  // namespace hjump

#endif
