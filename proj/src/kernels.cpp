#include "kpztail/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace kpztail {

double sigma_weighted_kernel(double x, double y, const Params& p) {
    double t13 = p.t13();
    double sx = fermi(t13 * (x + p.s));
    double sy = fermi(t13 * (y + p.s));
    return std::sqrt(sx) * airy_kernel(x, y) * std::sqrt(sy);
}

QuadratureRule finite_temperature_r_rule(const Params& p, double u_min) {
    double t13 = p.t13();
    double r_minus = 45.0 / t13;                 // sigma(T^{1/3} r) <= e^{-45} below
    double r_plus = 40.0 + std::max(0.0, -u_min); // Airy decay beyond u + r ~ 40
    // Panel width limited by two scales: the sigma transition layer of width
    // ~1/T^{1/3} at r = 0, and the Ai(u+r) oscillation wavelength
    // 2*pi/sqrt(|u+r|) where u_min + r < 0.
    std::vector<double> breaks{-r_minus};
    while (breaks.back() < r_plus) {
        double r = breaks.back();
        double h = 2.5;
        double depth = -(u_min + r);
        if (depth > 1.0) h = std::min(h, 9.0 / std::sqrt(depth));
        double layer = std::max(std::fabs(r) / 2.0, 0.25 / t13);
        h = std::min(h, layer);
        double next = r + h;
        if (r < 0.0 && next > 0.0) next = 0.0;
        if (next > r_plus - h / 2.0) next = r_plus;
        breaks.push_back(next);
    }
    return composite_rule(breaks, 16);
}

double finite_temperature_kernel(double u, double v, const Params& p,
                                 const QuadratureRule& r_rule) {
    if (v < u) std::swap(u, v);
    double t13 = p.t13();
    double sum = 0.0, abs_sum = 0.0;
    double first = 0.0, last = 0.0;
    const std::size_t n = r_rule.size();
    for (std::size_t k = 0; k < n; ++k) {
        double r = r_rule.nodes[k];
        double term = r_rule.weights[k] * fermi(t13 * r) *
                      airy_eval(u + r).ai * airy_eval(v + r).ai;
        sum += term;
        abs_sum += std::fabs(term);
        if (k == 0) first = term;
        if (k + 1 == n) last = term;
    }
    double scale = std::max(abs_sum, 1e-300);
    if (std::fabs(first) > 1e-12 * scale || std::fabs(last) > 1e-12 * scale)
        throw TruncationTooTight("finite-temperature r-rule window too short for 1e-12");
    return sum;
}

double indicator_kernel(double x, double y, double /*s*/) {
    return airy_kernel(x, y);
}

} // namespace kpztail
