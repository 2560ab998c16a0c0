#ifndef HJUMP_POLYNOMIAL_HPP
#define HJUMP_POLYNOMIAL_HPP

#include <vector>

namespace hjump {

// Distinct real roots of the polynomial with ascending coefficients
// (coeffs[i] multiplies x^i) inside (lo, hi], located by Sturm-sequence
// isolation and bisection on the sign-change count, then Newton-polished to
// about 1e-12. Degree must be at most `max_degree` after trimming leading
// zeros; the zero polynomial and an empty coefficient list are rejected.
std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi,
                               int max_degree = 8);

double poly_eval(const std::vector<double>& coeffs, double x);

}  // namespace hjump

#endif
