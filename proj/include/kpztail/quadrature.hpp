#ifndef KPZTAIL_QUADRATURE_HPP
#define KPZTAIL_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kpztail/dd.hpp"
#include "kpztail/errors.hpp"

namespace kpztail {

enum class Precision { standard, extended };

template <typename Real>
struct QuadratureRuleT {
    std::vector<Real> nodes;
    std::vector<Real> weights;
    std::string domain = "[-1,1]";

    std::size_t size() const { return nodes.size(); }

    template <typename F>
    auto integrate(F&& f) const {
        auto acc = Real(0) * f(nodes[0]); // zero of the integrand's value type
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

using QuadratureRule = QuadratureRuleT<double>;

// Gauss-Legendre rule on [-1,1]. Nodes are Newton-refined roots of the
// degree-n Legendre polynomial, seeded by the Chebyshev-like asymptotic guess.
template <typename Real>
QuadratureRuleT<Real> gauss_legendre_t(int n) {
    if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
    QuadratureRuleT<Real> rule;
    rule.nodes.assign(n, Real(0));
    rule.weights.assign(n, Real(0));
    const int m = (n + 1) / 2;
    const double eps = real_traits<Real>::eps();
    for (int i = 0; i < m; ++i) {
        Real z = real_traits<Real>::from(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
        Real pp(0);
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence P_0..P_n at z
            Real p1(1), p2(0);
            for (int j = 1; j <= n; ++j) {
                Real p3 = p2;
                p2 = p1;
                p1 = (Real(2 * j - 1) * z * p2 - Real(j - 1) * p3) / Real(j);
            }
            pp = Real(n) * (z * p1 - p2) / (z * z - Real(1));
            Real dz = p1 / pp;
            z -= dz;
            if (to_double(fabs(dz)) <= eps * (1.0 + std::fabs(to_double(z)))) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        Real w = Real(2) / ((Real(1) - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = Real(0);
    return rule;
}

inline QuadratureRule gauss_legendre(int n) { return gauss_legendre_t<double>(n); }

struct DomainMap {
    enum class Kind { affine, algebraic_half_line, truncated_half_line } kind;
    double a = -1.0;  // left endpoint
    double b = 1.0;   // right endpoint (affine only)
    double scale = 1.0; // L for the algebraic map t -> a + L(1+t)/(1-t)
    double width = 1.0; // W for truncation [a, a+W]

    static DomainMap affine(double a, double b) {
        if (!(b > a)) throw DomainError("affine map requires b > a");
        return {Kind::affine, a, b, 0, 0};
    }
    static DomainMap half_line(double a, double L) {
        if (!(L > 0)) throw DomainError("half-line map requires L > 0");
        return {Kind::algebraic_half_line, a, 0, L, 0};
    }
    static DomainMap window(double a, double W) {
        if (!(W > 0)) throw DomainError("truncation window requires W > 0");
        return {Kind::truncated_half_line, a, 0, 0, W};
    }
};

// Push a rule on [-1,1] through a domain map; weights pick up the Jacobian.
template <typename Real>
QuadratureRuleT<Real> map_rule_t(const QuadratureRuleT<Real>& rule, const DomainMap& map) {
    QuadratureRuleT<Real> out;
    const std::size_t n = rule.size();
    out.nodes.resize(n);
    out.weights.resize(n);
    switch (map.kind) {
    case DomainMap::Kind::affine: {
        Real a = real_traits<Real>::from(map.a), b = real_traits<Real>::from(map.b);
        Real half = (b - a) * Real(0.5);
        Real mid = (b + a) * Real(0.5);
        for (std::size_t i = 0; i < n; ++i) {
            out.nodes[i] = mid + half * rule.nodes[i];
            out.weights[i] = half * rule.weights[i];
        }
        out.domain = "[" + std::to_string(map.a) + "," + std::to_string(map.b) + "]";
        break;
    }
    case DomainMap::Kind::algebraic_half_line: {
        // t in (-1,1) -> x = a + L(1+t)/(1-t), Jacobian 2L/(1-t)^2
        Real a = real_traits<Real>::from(map.a), L = real_traits<Real>::from(map.scale);
        for (std::size_t i = 0; i < n; ++i) {
            Real t = rule.nodes[i];
            Real om = Real(1) - t;
            out.nodes[i] = a + L * (Real(1) + t) / om;
            out.weights[i] = rule.weights[i] * Real(2) * L / (om * om);
        }
        out.domain = "(" + std::to_string(map.a) + ",inf)";
        break;
    }
    case DomainMap::Kind::truncated_half_line: {
        Real a = real_traits<Real>::from(map.a), W = real_traits<Real>::from(map.width);
        Real half = W * Real(0.5);
        for (std::size_t i = 0; i < n; ++i) {
            out.nodes[i] = a + half * (Real(1) + rule.nodes[i]);
            out.weights[i] = half * rule.weights[i];
        }
        out.domain = "[" + std::to_string(map.a) + "," + std::to_string(map.a + map.width) + "]";
        break;
    }
    }
    return out;
}

inline QuadratureRule map_rule(const QuadratureRule& rule, const DomainMap& map) {
    return map_rule_t<double>(rule, map);
}

// Composite rule built from per-panel Gauss-Legendre pieces on consecutive
// breakpoints. Panels share one base rule of `points_per_panel` nodes.
template <typename Real>
QuadratureRuleT<Real> composite_rule_t(const std::vector<double>& breakpoints, int points_per_panel) {
    if (breakpoints.size() < 2) throw DomainError("composite rule needs >= 2 breakpoints");
    auto base = gauss_legendre_t<Real>(points_per_panel);
    QuadratureRuleT<Real> out;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        auto piece = map_rule_t<Real>(base, DomainMap::affine(breakpoints[k], breakpoints[k + 1]));
        out.nodes.insert(out.nodes.end(), piece.nodes.begin(), piece.nodes.end());
        out.weights.insert(out.weights.end(), piece.weights.begin(), piece.weights.end());
    }
    out.domain = "composite[" + std::to_string(breakpoints.front()) + "," +
                 std::to_string(breakpoints.back()) + "]";
    return out;
}

inline QuadratureRule composite_rule(const std::vector<double>& breakpoints, int points_per_panel) {
    return composite_rule_t<double>(breakpoints, points_per_panel);
}

// Breakpoints on [a,b] refined geometrically toward each center down to the
// given local scale; panels away from the centers grow by factor 2.
std::vector<double> graded_breaks(double a, double b,
                                  const std::vector<std::pair<double, double>>& centers);

// Adaptive Gauss-Legendre integration with an embedded error estimate
// (10- vs 20-point per interval), bisecting until |err| <= tol locally.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

} // namespace kpztail

#endif
