#include "hjump/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hjump {

double poly_eval(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

namespace {

using Poly = std::vector<double>;  // ascending

Poly trim(Poly p, double eps) {
    while (!p.empty() && std::abs(p.back()) <= eps) p.pop_back();
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
    return d;
}

// Remainder of a divided by b, normalized to unit max coefficient. Positive
// scaling keeps the Sturm sign structure intact while avoiding coefficient
// blow-up across the chain.
Poly remainder(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        double q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        a = trim(std::move(a), 0.0);
    }
    double scale = 0.0;
    for (double c : a) scale = std::max(scale, std::abs(c));
    if (scale > 0.0)
        for (double& c : a) c /= scale;
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = derivative(p);
    d = trim(std::move(d), 0.0);
    if (d.empty()) return chain;
    chain.push_back(d);
    for (;;) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        r = trim(std::move(r), 1e-13);
        if (r.empty()) break;
        for (double& c : r) c = -c;
        chain.push_back(r);
        if (r.size() == 1) break;
    }
    return chain;
}

int sign_changes(const std::vector<Poly>& chain, double x) {
    int changes = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        double v = poly_eval(p, x);
        int s = (v > 0.0) - (v < 0.0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi,
                               int max_degree) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    double top = 0.0;
    for (double c : coeffs) top = std::max(top, std::abs(c));
    if (top == 0.0) throw std::invalid_argument("zero polynomial has no isolated roots");
    Poly p = trim(coeffs, top * 1e-300);
    if (static_cast<int>(p.size()) - 1 > max_degree)
        throw std::invalid_argument("degree " + std::to_string(p.size() - 1) +
                                    " exceeds supported maximum " + std::to_string(max_degree));
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    if (p.size() <= 1) return {};

    auto chain = sturm_chain(p);
    auto count = [&](double a, double b) {  // distinct roots in (a, b]
        return sign_changes(chain, a) - sign_changes(chain, b);
    };

    std::vector<double> roots;
    std::vector<std::pair<double, double>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int k = count(a, b);
        if (k <= 0) continue;
        if (k == 1 || b - a < 1e-13 * std::max(1.0, std::abs(a))) {
            // bisect on the count so even-multiplicity roots converge too
            double x = a, y = b;
            while (y - x > 1e-13 * std::max(1.0, std::abs(y))) {
                double mid = 0.5 * (x + y);
                if (count(x, mid) >= 1)
                    y = mid;
                else
                    x = mid;
            }
            double root = 0.5 * (x + y);
            Poly d = derivative(p);
            for (int it = 0; it < 8; ++it) {
                double fv = poly_eval(p, root);
                double dv = poly_eval(d, root);
                if (dv == 0.0) break;
                double next = root - fv / dv;
                if (next <= x || next >= y) break;
                root = next;
            }
            roots.push_back(root);
        } else {
            double mid = 0.5 * (a + b);
            work.push_back({a, mid});
            work.push_back({mid, b});
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hjump
