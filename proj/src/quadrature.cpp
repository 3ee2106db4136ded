#include "kpztail/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace kpztail {

std::vector<double> graded_breaks(double a, double b,
                                  const std::vector<std::pair<double, double>>& centers) {
    if (!(b > a)) throw DomainError("graded_breaks requires b > a");
    std::vector<double> breaks{a, b};
    double coarse = (b - a) / 4.0;
    for (auto [c, h0] : centers) {
        if (c < a - coarse || c > b + coarse) continue;
        if (!(h0 > 0)) throw DomainError("graded_breaks requires positive scales");
        if (c > a && c < b) breaks.push_back(c);
        for (double h = h0; h < coarse; h *= 2.0) {
            if (c - h > a) breaks.push_back(c - h);
            if (c + h < b) breaks.push_back(c + h);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [&](double x, double y) { return y - x < 1e-300; }),
                 breaks.end());
    // Cap coarse panel growth between refinement zones.
    std::vector<double> out{breaks.front()};
    for (std::size_t k = 1; k < breaks.size(); ++k) {
        while (breaks[k] - out.back() > 1.5 * coarse) out.push_back(out.back() + coarse);
        out.push_back(breaks[k]);
    }
    return out;
}

namespace {

double panel_integrate(const std::function<double(double)>& f, double a, double b,
                       const QuadratureRule& rule) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

} // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    static const QuadratureRule lo = gauss_legendre(10);
    static const QuadratureRule hi = gauss_legendre(20);
    struct Frame { double a, b, tol; int depth; };
    std::vector<Frame> stack{{a, b, abs_tol, 0}};
    double total = 0.0;
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        double coarse = panel_integrate(f, fr.a, fr.b, lo);
        double fine = panel_integrate(f, fr.a, fr.b, hi);
        double err = std::fabs(fine - coarse);
        if (err <= fr.tol || fr.b - fr.a <= 1e-15 * (std::fabs(fr.a) + std::fabs(fr.b))) {
            total += fine;
            continue;
        }
        if (fr.depth >= max_depth)
            throw QuadratureFailure("adaptive refinement stalled before reaching tolerance");
        double m = 0.5 * (fr.a + fr.b);
        stack.push_back({fr.a, m, 0.5 * fr.tol, fr.depth + 1});
        stack.push_back({m, fr.b, 0.5 * fr.tol, fr.depth + 1});
    }
    return total;
}

} // namespace kpztail
