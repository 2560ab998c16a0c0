#include "hjump/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hjump/errors.hpp"
#include "hjump/parallel.hpp"
#include "hjump/rng.hpp"

namespace hjump {

void validate(const SolverConfig& cfg) {
    if (cfg.restarts < 1) throw std::invalid_argument("solver needs at least one restart");
    if (cfg.max_iters < 1) throw std::invalid_argument("solver needs at least one iteration");
    if (!(cfg.move_tol > 0.0)) throw std::invalid_argument("movement tolerance must be positive");
    if (!(cfg.support_eps > 0.0)) throw std::invalid_argument("support threshold must be positive");
    if (cfg.threads < 0) throw std::invalid_argument("thread count cannot be negative");
    if (cfg.grid_budget < 1) throw std::invalid_argument("grid budget must be positive");
}

namespace {

struct EdgeTerm {
    std::vector<std::pair<int, int>> vm;  // (0-based vertex, multiplicity)
    double fac = 1.0;                     // 1 / prod m!
};

std::vector<EdgeTerm> build_terms(const RPattern& p) {
    std::vector<EdgeTerm> terms;
    terms.reserve(p.edge_count());
    for (const Edge& e : p.edges()) {
        EdgeTerm t;
        for (const auto& [v, m] : e.items()) {
            t.vm.emplace_back(v - 1, m);
            for (int i = 2; i <= m; ++i) t.fac /= i;
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

double ipow(double x, int m) {
    double acc = 1.0;
    for (int i = 0; i < m; ++i) acc *= x;
    return acc;
}

double eval_value(const std::vector<EdgeTerm>& terms, std::span<const double> w) {
    double f = 0.0;
    for (const EdgeTerm& t : terms) {
        double prod = t.fac;
        for (const auto& [v, m] : t.vm) prod *= ipow(w[v], m);
        f += prod;
    }
    return f;
}

// Value and gradient in one pass. The gradient is exact on the simplex
// boundary: an edge with one zero vertex of multiplicity 1 still contributes
// to that vertex's partial, which the off-support KKT test depends on.
double eval_value_grad(const std::vector<EdgeTerm>& terms, std::span<const double> w,
                       std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    double f = 0.0;
    for (const EdgeTerm& t : terms) {
        int zeros = 0;
        std::size_t zpos = 0;
        for (std::size_t i = 0; i < t.vm.size(); ++i) {
            if (w[t.vm[i].first] == 0.0) {
                ++zeros;
                zpos = i;
                if (zeros > 1) break;
            }
        }
        if (zeros == 0) {
            double prod = t.fac;
            for (const auto& [v, m] : t.vm) prod *= ipow(w[v], m);
            f += prod;
            for (const auto& [v, m] : t.vm) g[v] += m * prod / w[v];
        } else if (zeros == 1 && t.vm[zpos].second == 1) {
            double prod = t.fac;
            for (std::size_t i = 0; i < t.vm.size(); ++i) {
                if (i == zpos) continue;
                prod *= ipow(w[t.vm[i].first], t.vm[i].second);
            }
            g[t.vm[zpos].first] += prod;
        }
    }
    return f;
}

// Euclidean projection onto the unit simplex (sort-based).
void project_simplex(std::vector<double>& x) {
    std::vector<double> u(x);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double csum = 0.0, theta = 0.0;
    int k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        csum += u[i];
        double cand = (csum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - cand > 0.0) {
            k = static_cast<int>(i + 1);
            theta = cand;
        }
    }
    if (k == 0) theta = (csum - 1.0) / static_cast<double>(u.size());
    for (double& v : x) v = std::max(0.0, v - theta);
}

struct AscentOutcome {
    std::vector<double> w;
    double value = 0.0;
    bool converged = false;
};

AscentOutcome ascend(const std::vector<EdgeTerm>& terms, int r, std::vector<double> w,
                     const SolverConfig& cfg) {
    const int n = static_cast<int>(w.size());
    std::vector<double> g(n), next(n);
    AscentOutcome out;
    double prev_f = -1.0;
    int flat = 0;
    for (long long it = 0; it < cfg.max_iters; ++it) {
        double f = eval_value_grad(terms, w, g);
        // Degenerate boundary maxima shrink coordinates like 1/k, so the
        // movement test alone can run out the iteration budget; treat a long
        // stretch of sub-ulp value gains as converged.
        if (f - prev_f <= 5e-16 * std::max(1.0, f)) {
            if (++flat >= 30) {
                out.converged = true;
                break;
            }
        } else {
            flat = 0;
        }
        prev_f = f;
        if (f <= 0.0) {
            double gnorm = 0.0;
            for (double x : g) gnorm = std::max(gnorm, std::abs(x));
            if (gnorm == 0.0) {
                out.converged = true;
                break;
            }
            next = w;
            for (int i = 0; i < n; ++i) next[i] += g[i];
            project_simplex(next);
        } else {
            double denom = r * f;
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                next[i] = w[i] * g[i] / denom;
                s += next[i];
            }
            if (s <= 0.0) {
                out.converged = true;  // all mass on zero-gradient vertices
                break;
            }
            for (int i = 0; i < n; ++i) next[i] /= s;
        }
        double move = 0.0;
        for (int i = 0; i < n; ++i) move = std::max(move, std::abs(next[i] - w[i]));
        w.swap(next);
        if (move < cfg.move_tol) {
            out.converged = true;
            break;
        }
    }
    // drop numerically dead coordinates before reporting
    double sum = 0.0;
    for (double& x : w) {
        if (x < 1e-12) x = 0.0;
        sum += x;
    }
    if (sum > 0.0)
        for (double& x : w) x /= sum;
    out.value = eval_value(terms, w);
    out.w = std::move(w);
    return out;
}

LagrangianResult finalize_result(const RPattern& p, const std::vector<EdgeTerm>& terms,
                                 std::vector<double> w, const SolverConfig& cfg, int restarts,
                                 bool converged) {
    LagrangianResult res;
    res.value = eval_value(terms, w);
    res.restarts_used = restarts;
    res.converged = converged;
    std::vector<double> g(w.size());
    eval_value_grad(terms, w, g);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (Vertex v = 1; v <= p.order(); ++v) {
        if (w[v - 1] > cfg.support_eps) {
            res.support.push_back(v);
            lo = std::min(lo, g[v - 1]);
            hi = std::max(hi, g[v - 1]);
        }
    }
    res.residual = res.support.empty() ? 0.0 : hi - lo;
    res.classification = static_cast<int>(res.support.size()) == p.order()
                             ? Classification::interior_stationary
                             : Classification::boundary;
    res.witness = Weighting::normalized(std::move(w));
    return res;
}

}  // namespace

std::vector<double> grad(const RPattern& p, std::span<const double> w) {
    if (static_cast<int>(w.size()) != p.order())
        throw std::invalid_argument("weighting size does not match pattern order");
    std::vector<double> g(w.size());
    eval_value_grad(build_terms(p), w, g);
    return g;
}

std::vector<std::vector<double>> hessian(const RPattern& p, std::span<const double> w) {
    if (static_cast<int>(w.size()) != p.order())
        throw std::invalid_argument("weighting size does not match pattern order");
    const int n = p.order();
    std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
    for (const EdgeTerm& t : build_terms(p)) {
        std::vector<std::size_t> zpos;
        for (std::size_t i = 0; i < t.vm.size(); ++i)
            if (w[t.vm[i].first] == 0.0) zpos.push_back(i);
        if (zpos.size() == 0) {
            double prod = t.fac;
            for (const auto& [v, m] : t.vm) prod *= ipow(w[v], m);
            for (const auto& [u, mu] : t.vm) {
                for (const auto& [v, mv] : t.vm) {
                    if (u == v) continue;
                    h[u][v] += mu * mv * prod / (w[u] * w[v]);
                }
                if (mu >= 2) h[u][u] += mu * (mu - 1) * prod / (w[u] * w[u]);
            }
        } else if (zpos.size() == 1) {
            auto [v0, m0] = t.vm[zpos[0]];
            double po = t.fac;
            for (std::size_t i = 0; i < t.vm.size(); ++i) {
                if (i == zpos[0]) continue;
                po *= ipow(w[t.vm[i].first], t.vm[i].second);
            }
            if (m0 == 1) {
                for (std::size_t i = 0; i < t.vm.size(); ++i) {
                    if (i == zpos[0]) continue;
                    auto [u, mu] = t.vm[i];
                    double x = mu * po / w[u];
                    h[v0][u] += x;
                    h[u][v0] += x;
                }
            } else if (m0 == 2) {
                h[v0][v0] += 2.0 * po;
            }
        } else if (zpos.size() == 2) {
            auto [v0, m0] = t.vm[zpos[0]];
            auto [v1, m1] = t.vm[zpos[1]];
            if (m0 == 1 && m1 == 1) {
                double po = t.fac;
                for (std::size_t i = 0; i < t.vm.size(); ++i) {
                    if (i == zpos[0] || i == zpos[1]) continue;
                    po *= ipow(w[t.vm[i].first], t.vm[i].second);
                }
                h[v0][v1] += po;
                h[v1][v0] += po;
            }
        }
    }
    return h;
}

LagrangianResult lagrangian_numeric(const RPattern& p, const SolverConfig& cfg) {
    validate(cfg);
    const int n = p.order();
    const int r = p.uniformity();
    auto terms = build_terms(p);
    if (terms.empty()) {
        LagrangianResult res = finalize_result(p, terms, std::vector<double>(n, 1.0 / n), cfg,
                                               cfg.restarts, true);
        return res;
    }
    std::vector<AscentOutcome> outcomes(cfg.restarts);
    parallel_for_index(static_cast<std::size_t>(cfg.restarts), cfg.threads, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        outcomes[i] = ascend(terms, r, rng.next_simplex_point(n), cfg);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].value > outcomes[best].value) best = i;
    return finalize_result(p, terms, std::move(outcomes[best].w), cfg, cfg.restarts,
                           outcomes[best].converged);
}

GridResult lagrangian_grid_oracle(const RPattern& p, int resolution, long long budget) {
    if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
    const int n = p.order();
    // C(resolution + n - 1, n - 1) grid points, checked before enumerating
    __int128 points = 1;
    bool overflow = false;
    for (int i = 1; i <= n - 1; ++i) {
        points = points * (resolution + n - 1 - (n - 1) + i) / i;
        if (points > budget) {
            overflow = true;
            break;
        }
    }
    if (overflow)
        throw BudgetError("grid enumeration over compositions of " + std::to_string(resolution) +
                              " into " + std::to_string(n) + " parts exceeds budget",
                          points > (__int128)std::numeric_limits<long long>::max()
                              ? std::numeric_limits<long long>::max()
                              : static_cast<long long>(points),
                          budget);

    auto terms = build_terms(p);
    GridResult out;
    out.resolution = resolution;
    std::vector<int> comp(n, 0);
    std::vector<int> best_comp(n, 0);
    best_comp[0] = resolution;
    std::vector<double> w(n, 0.0);
    double best = -1.0;
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            comp[i] = left;
            for (int j = 0; j < n; ++j) w[j] = static_cast<double>(comp[j]) / resolution;
            ++out.points;
            double v = eval_value(terms, w);
            if (v > best) {
                best = v;
                best_comp = comp;
            }
            return;
        }
        for (int x = 0; x <= left; ++x) {
            comp[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, resolution);
    out.value = best;
    std::vector<double> bw(n);
    for (int j = 0; j < n; ++j) bw[j] = static_cast<double>(best_comp[j]) / resolution;
    out.argmax = Weighting::normalized(std::move(bw));
    return out;
}

namespace {

// Partial-pivot Gaussian elimination; false on a numerically singular matrix.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int rr = col + 1; rr < n; ++rr)
            if (std::abs(a[rr][col]) > std::abs(a[piv][col])) piv = rr;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int rr = col + 1; rr < n; ++rr) {
            double f = a[rr][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[rr][cc] -= f * a[col][cc];
            b[rr] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double acc = b[row];
        for (int cc = row + 1; cc < n; ++cc) acc -= a[row][cc] * x[cc];
        x[row] = acc / a[row][row];
    }
    return true;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-28) break;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (std::abs(a[i][j]) < 1e-300) continue;
                double theta = (a[j][j] - a[i][i]) / (2.0 * a[i][j]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double aki = a[k][i], akj = a[k][j];
                    a[k][i] = c * aki - s * akj;
                    a[k][j] = s * aki + c * akj;
                }
                for (int k = 0; k < n; ++k) {
                    double aik = a[i][k], ajk = a[j][k];
                    a[i][k] = c * aik - s * ajk;
                    a[j][k] = s * aik + c * ajk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

double det_dense(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int rr = col + 1; rr < n; ++rr)
            if (std::abs(a[rr][col]) > std::abs(a[piv][col])) piv = rr;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int rr = col + 1; rr < n; ++rr) {
            double f = a[rr][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[rr][cc] -= f * a[col][cc];
        }
    }
    return det;
}

// Equal-partials stationarity system on the open face: F_i = g_i - g_{s-1}
// for i < s-1, F_{s-1} = sum(x) - 1.
void face_system(const RPattern& induced, const std::vector<double>& x, std::vector<double>& F,
                 std::vector<std::vector<double>>& J) {
    const int s = static_cast<int>(x.size());
    std::vector<double> g = grad(induced, x);
    auto H = hessian(induced, x);
    F.assign(s, 0.0);
    J.assign(s, std::vector<double>(s, 0.0));
    for (int i = 0; i < s - 1; ++i) {
        F[i] = g[i] - g[s - 1];
        for (int j = 0; j < s; ++j) J[i][j] = H[i][j] - H[s - 1][j];
    }
    double sum = -1.0;
    for (double v : x) sum += v;
    F[s - 1] = sum;
    for (int j = 0; j < s; ++j) J[s - 1][j] = 1.0;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool newton_face(const RPattern& induced, std::vector<double>& x) {
    const int s = static_cast<int>(x.size());
    std::vector<double> F, Fn, delta;
    std::vector<std::vector<double>> J;
    for (int it = 0; it < 80; ++it) {
        face_system(induced, x, F, J);
        double fnorm = max_abs(F);
        if (fnorm <= 1e-13) return true;
        std::vector<double> rhs(F);
        for (double& v : rhs) v = -v;
        if (!solve_dense(J, rhs, delta)) {
            auto Jreg = J;
            for (int i = 0; i < s; ++i) Jreg[i][i] += 1e-9;
            if (!solve_dense(Jreg, rhs, delta)) return false;
        }
        bool accepted = false;
        double alpha = 1.0;
        std::vector<double> xn(s);
        std::vector<std::vector<double>> Jn;
        for (int bt = 0; bt < 10; ++bt, alpha *= 0.5) {
            bool sane = true;
            for (int i = 0; i < s; ++i) {
                xn[i] = x[i] + alpha * delta[i];
                if (std::abs(xn[i]) > 4.0) sane = false;
            }
            if (!sane) continue;
            face_system(induced, xn, Fn, Jn);
            if (max_abs(Fn) < (1.0 - 1e-4 * alpha) * fnorm) {
                x = xn;
                accepted = true;
                break;
            }
        }
        if (!accepted) return false;
    }
    return false;
}

struct FaceClassification {
    StationaryKind kind = StationaryKind::degenerate;
    double det = 0.0;
};

// Reduced Hessian on the face tangent space, eliminating the largest-weight
// coordinate: basis e_j - e_{imax}.
FaceClassification classify_face_point(const RPattern& induced, const std::vector<double>& x) {
    FaceClassification out;
    const int s = static_cast<int>(x.size());
    if (s == 1) {
        out.kind = StationaryKind::local_max;
        return out;
    }
    auto H = hessian(induced, x);
    int imax = 0;
    for (int i = 1; i < s; ++i)
        if (x[i] > x[imax]) imax = i;
    std::vector<int> idx;
    for (int i = 0; i < s; ++i)
        if (i != imax) idx.push_back(i);
    const int m = s - 1;
    std::vector<std::vector<double>> R(m, std::vector<double>(m, 0.0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            R[a][b] = H[idx[a]][idx[b]] - H[idx[a]][imax] - H[imax][idx[b]] + H[imax][imax];
    out.det = det_dense(R);
    auto eig = jacobi_eigenvalues(R);
    double scale = 0.0;
    for (const auto& row : R) scale = std::max(scale, max_abs(row));
    double tol = 1e-8 * std::max(1.0, scale);
    bool has_pos = eig.back() > tol;
    bool has_zero = std::any_of(eig.begin(), eig.end(),
                                [&](double e) { return std::abs(e) <= tol; });
    if (has_pos)
        out.kind = StationaryKind::saddle;
    else if (has_zero)
        out.kind = StationaryKind::degenerate;
    else
        out.kind = StationaryKind::local_max;
    return out;
}

std::vector<double> expand_to_full(const std::vector<double>& x, const std::vector<Vertex>& s,
                                   int n) {
    std::vector<double> full(n, 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) full[s[i] - 1] = std::max(x[i], 0.0);
    return full;
}

}  // namespace

SupportEnumResult lagrangian_support_enum(const RPattern& p, const SolverConfig& cfg, int max_n) {
    return lagrangian_support_enum(p, cfg, max_n, lagrangian_numeric(p, cfg));
}

SupportEnumResult lagrangian_support_enum(const RPattern& p, const SolverConfig& cfg, int max_n,
                                          const LagrangianResult& baseline) {
    validate(cfg);
    const int n = p.order();
    if (n > max_n)
        throw std::invalid_argument("support enumeration over " + std::to_string(n) +
                                    " vertices exceeds max_n=" + std::to_string(max_n));
    auto terms = build_terms(p);
    const LagrangianResult& numeric = baseline;

    const std::uint32_t nmasks = (1u << n) - 1;
    std::vector<std::vector<StationaryPoint>> per_mask(nmasks);
    std::vector<char> fallback_used(nmasks, 0);

    parallel_for_index(nmasks, cfg.threads, [&](std::size_t slot) {
        std::uint32_t mask = static_cast<std::uint32_t>(slot) + 1;
        std::vector<Vertex> support;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) support.push_back(v);
        RPattern induced = induced_subpattern(p, support);
        if (induced.edge_count() == 0) return;
        const int s = static_cast<int>(support.size());
        std::vector<StationaryPoint>& found = per_mask[slot];

        auto record = [&](std::vector<double> x, bool via_newton) {
            for (const StationaryPoint& q : found) {
                double d = 0.0;
                for (int i = 0; i < s; ++i)
                    d = std::max(d, std::abs(q.witness.values()[support[i] - 1] - x[i]));
                if (d <= 1e-9) return;
            }
            StationaryPoint pt;
            pt.support = support;
            pt.value = pattern_weight(induced, std::span<const double>(x));
            auto cls = classify_face_point(induced, x);
            pt.kind = cls.kind;
            pt.reduced_hessian_det = cls.det;
            pt.interior = (s == n);
            pt.newton_converged = via_newton;
            pt.witness = Weighting::normalized(expand_to_full(x, support, n));
            found.push_back(std::move(pt));
        };

        if (s == 1) {
            record({1.0}, true);
            return;
        }

        std::vector<std::vector<double>> seeds;
        seeds.emplace_back(s, 1.0 / s);
        {
            std::vector<double> from_witness(s);
            double tot = 0.0;
            for (int i = 0; i < s; ++i) {
                from_witness[i] = std::max(numeric.witness.values()[support[i] - 1], 1e-4);
                tot += from_witness[i];
            }
            for (double& v : from_witness) v /= tot;
            seeds.push_back(std::move(from_witness));
        }
        // A face can carry several interior stationary points and Newton
        // basins are unpredictable, so stratify the starts: a deterministic
        // composition grid pulled toward the barycenter (to stay strictly
        // positive), plus two random draws.
        {
            int q = s <= 6 ? 4 : 3;
            std::vector<int> comp(s, 0);
            comp[0] = q;
            while (true) {
                std::vector<double> x(s);
                for (int i = 0; i < s; ++i)
                    x[i] = 0.8 * comp[i] / q + 0.2 / s;
                seeds.push_back(std::move(x));
                int i = s - 2;
                while (i >= 0 && comp[i] == 0) --i;
                if (i < 0) break;
                --comp[i];
                int rest = comp[s - 1] + 1;
                comp[s - 1] = 0;
                comp[i + 1] = rest;
            }
        }
        Rng rng(derive_seed(cfg.seed, 0x5e00000u + mask));
        seeds.push_back(rng.next_simplex_point(s));
        seeds.push_back(rng.next_simplex_point(s));

        for (auto& seed : seeds) {
            std::vector<double> x = seed;
            if (!newton_face(induced, x)) continue;
            bool inside = true;
            double tot = 0.0;
            for (double v : x) {
                if (v <= 1e-10) inside = false;
                tot += v;
            }
            if (!inside || std::abs(tot - 1.0) > 1e-8) continue;
            record(std::move(x), true);
        }
        if (found.empty()) {
            // Newton failed everywhere on this face; fall back to ascent and
            // keep the endpoint only if it stays interior to the face.
            fallback_used[slot] = 1;
            auto induced_terms = build_terms(induced);
            AscentOutcome best;
            best.value = -1.0;
            for (int k = 0; k < 2; ++k) {
                std::vector<double> start =
                    k == 0 ? std::vector<double>(s, 1.0 / s)
                           : Rng(derive_seed(cfg.seed, 0x7a0000u + mask)).next_simplex_point(s);
                auto res = ascend(induced_terms, induced.uniformity(), std::move(start), cfg);
                if (res.value > best.value) best = std::move(res);
            }
            bool inside = std::all_of(best.w.begin(), best.w.end(),
                                      [&](double v) { return v > cfg.support_eps; });
            if (inside) record(std::move(best.w), false);
        }
    });

    SupportEnumResult out;
    for (std::size_t slot = 0; slot < nmasks; ++slot) {
        out.newton_failures += fallback_used[slot];
        for (auto& pt : per_mask[slot]) out.points.push_back(std::move(pt));
    }

    const StationaryPoint* winner = nullptr;
    for (const StationaryPoint& pt : out.points) {
        if (!winner) {
            winner = &pt;
            continue;
        }
        if (pt.value > winner->value ||
            (pt.value == winner->value && (pt.support.size() < winner->support.size() ||
                                           (pt.support.size() == winner->support.size() &&
                                            pt.support < winner->support))))
            winner = &pt;
    }
    if (winner && winner->value >= numeric.value) {
        out.best = finalize_result(p, terms, winner->witness.values(), cfg, numeric.restarts_used,
                                   true);
    } else {
        // either the pattern is edgeless or ascent beat every stationary
        // candidate (Newton failures); report the stronger numeric answer
        out.best = numeric;
    }
    return out;
}

bool verify_kkt(const RPattern& p, const Weighting& w, double tol) {
    if (w.size() != p.order())
        throw std::invalid_argument("weighting size does not match pattern order");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    std::span<const double> ws(w.values());
    if (p.edge_count() > 0 && pattern_weight(p, ws) <= 0.0) return false;
    std::vector<double> g = grad(p, ws);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < p.order(); ++i) {
        if (ws[i] > 0.0) {
            lo = std::min(lo, g[i]);
            hi = std::max(hi, g[i]);
        }
    }
    if (hi - lo > tol) return false;
    for (int i = 0; i < p.order(); ++i)
        if (ws[i] == 0.0 && g[i] > hi + tol) return false;
    return true;
}

BlowupSearchResult best_blowup_density(const RGraph& g, int n, const SolverConfig& cfg) {
    validate(cfg);
    if (n < g.order())
        throw std::invalid_argument("target order " + std::to_string(n) +
                                    " below graph order " + std::to_string(g.order()));
    const int nv = g.order();
    LagrangianResult lam = lagrangian_numeric(g.pattern(), cfg);

    // largest-remainder rounding of the witness, keeping every class nonempty
    std::vector<int> k(nv, 1);
    int remaining = n - nv;
    std::vector<double> quota(nv);
    for (int i = 0; i < nv; ++i) quota[i] = lam.witness.values()[i] * n;
    for (int i = 0; i < nv && remaining > 0; ++i) {
        int extra = std::min(remaining, std::max(0, static_cast<int>(quota[i]) - 1));
        k[i] += extra;
        remaining -= extra;
    }
    while (remaining > 0) {
        int pick = 0;
        double best_frac = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < nv; ++i) {
            double frac = quota[i] - k[i];
            if (frac > best_frac) {
                best_frac = frac;
                pick = i;
            }
        }
        ++k[pick];
        --remaining;
    }

    auto count_edges = [&](const std::vector<int>& kk) {
        long long total = 0;
        for (const Edge& e : g.pattern().edges()) {
            long long prod = 1;
            for (const auto& [v, m] : e.items()) prod *= kk[v - 1];  // m == 1
            total += prod;
        }
        return total;
    };

    long long best = count_edges(k);
    for (;;) {
        long long improved = best;
        int from = -1, to = -1;
        for (int u = 0; u < nv; ++u) {
            if (k[u] <= 1) continue;
            for (int v = 0; v < nv; ++v) {
                if (u == v) continue;
                --k[u];
                ++k[v];
                long long c = count_edges(k);
                ++k[u];
                --k[v];
                if (c > improved) {
                    improved = c;
                    from = u;
                    to = v;
                }
            }
        }
        if (from < 0) break;
        --k[from];
        ++k[to];
        best = improved;
    }

    BlowupSearchResult out;
    out.spec.copies = std::move(k);
    out.density = Rational(best, binomial(n, g.uniformity()));
    return out;
}

}  // namespace hjump
