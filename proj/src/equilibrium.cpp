#include "kpztail/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace kpztail {

namespace {

// log(1 + e^r) without overflow.
double log1pexp(double r) {
    if (r > 0.0) return r + std::log1p(std::exp(-r));
    return std::log1p(std::exp(r));
}

// Derivatives of the Fermi factor at b.
struct FermiJet {
    double b, s0, s1, s2, s3;
    explicit FermiJet(double b_) : b(b_) {
        s0 = fermi(b);
        s1 = s0 * (1.0 - s0);
        s2 = s1 * (1.0 - 2.0 * s0);
        s3 = s2 * (1.0 - 2.0 * s0) - 2.0 * s1 * s1;
    }
    // (sigma(b + d) - sigma(b)) / d, stable for small d.
    double diff_quotient(double d) const {
        if (std::fabs(d) < 1e-5)
            return s1 + d * (0.5 * s2 + d * (s3 / 6.0));
        return (fermi(b + d) - s0) / d;
    }
};

// int_0^inf sigma(c2 (lambda - v^2)) dv and its lambda-derivative, truncated
// where the integrand drops below e^{-45}.
struct EndpointIntegrals {
    double value;
    double deriv; // d/dlambda = int c2 sigma'(c2 (lambda - v^2)) dv
};

EndpointIntegrals endpoint_integrals(double lambda, double c2) {
    double vmax2 = lambda + 45.0 / c2;
    if (vmax2 <= 0.0) {
        // sigma < e^{-45} on the whole half-line; the residual mass is below
        // the solver tolerance.
        return {0.0, 0.0};
    }
    double vmax = std::sqrt(vmax2);
    double vt = std::sqrt(std::max(0.0, lambda)); // sigma transition layer
    double h = std::min(0.05, 1.0 / (c2 * (2.0 * vt + 1.0)));
    auto rule = composite_rule(graded_breaks(0.0, vmax, {{vt, h}}), 16);
    double val = 0.0, der = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double v = rule.nodes[i];
        double arg = c2 * (lambda - v * v);
        val += rule.weights[i] * fermi(arg);
        der += rule.weights[i] * c2 * fermi_deriv(arg);
    }
    return {val, der};
}

} // namespace

double potential_v(double lambda, const Params& p) {
    return -std::pow(p.s, -1.5) * log1pexp(p.s * p.t13() * lambda);
}

double potential_v_prime(double lambda, const Params& p) {
    return -p.t13() / std::sqrt(p.s) * fermi(p.s * p.t13() * lambda);
}

EquilibriumData solve_lambda0(const Params& p, double tol) {
    if (!(p.s > 0.0)) throw DomainError("solve_lambda0 requires s > 0");
    if (!(tol > 0.0)) throw DomainError("solve_lambda0 requires tol > 0");
    double c = p.t13() / std::sqrt(p.s);
    double c2 = p.s * p.t13();
    auto G = [&](double lam) {
        auto I = endpoint_integrals(lam, c2);
        return std::pair{lam - 1.0 + (2.0 * c / M_PI) * I.value,
                         1.0 + (2.0 * c / M_PI) * I.deriv};
    };

    double lo = -2.0, hi = 1.0;
    // G(1) > 0 always; expand the bracket downward for small s where the
    // endpoint can sit below -2.
    int expand = 0;
    while (G(lo).first > 0.0) {
        lo = 2.0 * lo - 1.0;
        if (++expand > 60) throw NoConvergence("endpoint bracket expansion failed");
    }

    double x = 0.5 * (lo + hi);
    double g = 0.0, gp = 1.0;
    bool done = false;
    for (int it = 0; it < 200; ++it) {
        std::tie(g, gp) = G(x);
        if (std::fabs(g) <= tol) {
            done = true;
            break;
        }
        if (g > 0.0) hi = x; else lo = x;
        double step = g / gp;
        double xn = x - step;
        if (!(xn > lo) || !(xn < hi)) xn = 0.5 * (lo + hi); // Newton left the bracket
        if (xn == x) {
            done = true; // bracket exhausted at roundoff
            break;
        }
        x = xn;
    }
    if (!done && std::fabs(g) > tol * 16.0)
        throw NoConvergence("endpoint Newton/bisection hit the iteration cap");

    EquilibriumData eq{p, x, std::fabs(G(x).first), 0.0};
    eq.w_at_endpoint = w_at(x, eq);
    return eq;
}

double lambda0_asymptotic(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("lambda0_asymptotic requires s > 0");
    double t23 = std::cbrt(p.T * p.T);
    double x = M_PI * M_PI * p.s / t23;
    double root = x / (std::sqrt(1.0 + x) + 1.0); // sqrt(1+x) - 1, no cancellation
    return t23 / (M_PI * M_PI * p.s) * root * root;
}

double psi(double lambda, const EquilibriumData& eq) {
    double lam0 = eq.lambda0;
    if (!(lambda < lam0)) throw DomainError("psi requires lambda < lambda0");
    const Params& p = eq.p;
    double c = p.t13() / std::sqrt(p.s);
    double c2 = p.s * p.t13();
    double k = std::sqrt(lam0 - lambda);

    double u_hi = std::min(45.0, c2 * lam0);
    double u_lo = -45.0;
    if (u_hi <= u_lo) return 2.0 * k; // dsigma mass entirely beyond the edge

    double u_lam = c2 * lambda;
    double span = u_hi - u_lo;
    std::vector<std::pair<double, double>> centers{{u_hi, 1e-12 * span}};
    if (u_lam > u_lo && u_lam < u_hi) centers.push_back({u_lam, 1e-13 * span});
    auto rule = composite_rule(graded_breaks(u_lo, u_hi, centers), 16);

    double J = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double u = rule.nodes[i];
        double d = std::max(0.0, lam0 - u / c2);
        double sq = std::sqrt(d);
        // k - sq = (u - u_lam) / (c2 (k + sq)) exactly, so the log argument is
        // c2 (k+sq)^2 / |u - u_lam| with no cancellation near u = u_lam.
        double num = k + sq;
        J += rule.weights[i] * fermi_deriv(u) * std::log(c2 * num * num / std::fabs(u - u_lam));
    }
    return 2.0 * k + (c / M_PI) * J;
}

double w_at(double lambda, const EquilibriumData& eq) {
    const Params& p = eq.p;
    double lam0 = eq.lambda0;
    double c = p.t13() / std::sqrt(p.s);
    double c2 = p.s * p.t13();
    double b = c2 * lambda;
    FermiJet jet(b);
    double k2 = lam0 - lambda;

    double V = std::sqrt(std::max(0.0, lam0) + 45.0 / c2);
    if (k2 > 0.0) V = std::max(V, 1.5 * std::sqrt(k2) + 1.0);

    std::vector<std::pair<double, double>> centers;
    double vt = std::sqrt(std::max(0.0, lam0));
    centers.push_back({vt, std::min(0.05, 1.0 / (c2 * (2.0 * vt + 1.0)))});
    if (k2 > 0.0) {
        double vs = std::sqrt(k2);
        centers.push_back({vs, std::min(0.05, 1.0 / (c2 * (2.0 * vs + 1.0)))});
    }
    auto rule = composite_rule(graded_breaks(0.0, V, centers), 16);

    // Integrand after xi = lambda0 - v^2: 2 [sigma(c2(lambda0-v^2)) - sigma(b)]
    // / (k2 - v^2) = 2 c2 * diff_quotient(c2 (k2 - v^2)).
    double N = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double v = rule.nodes[i];
        N += rule.weights[i] * 2.0 * c2 * jet.diff_quotient(c2 * (k2 - v * v));
    }

    // Beyond V the sigma term is < e^{-45}; the remaining -sigma(b) tail has a
    // closed form.
    double tail;
    if (k2 > 1e-14) {
        double kk = std::sqrt(k2);
        tail = jet.s0 / kk * std::log((V + kk) / (V - kk));
    } else if (k2 < -1e-14) {
        double kk = std::sqrt(-k2);
        tail = 2.0 * jet.s0 / kk * (M_PI / 2.0 - std::atan(V / kk));
    } else {
        tail = 2.0 * jet.s0 / V;
    }
    return 1.0 + c / (2.0 * M_PI) * (N + tail);
}

double g_combination(double lambda, const EquilibriumData& eq) {
    if (!(lambda > eq.lambda0)) throw DomainError("g_combination requires lambda > lambda0");
    double K = std::sqrt(lambda - eq.lambda0);
    // 2 int sqrt(eta-lambda0) w deta = 4 int_0^K tau^2 w(lambda0 + tau^2) dtau.
    std::vector<double> breaks;
    for (int i = 0; i <= 6; ++i) breaks.push_back(K * i / 6.0);
    auto rule = composite_rule(breaks, 12);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double tau = rule.nodes[i];
        acc += rule.weights[i] * tau * tau * w_at(eq.lambda0 + tau * tau, eq);
    }
    return 4.0 * acc;
}

double step_lemma_error(const std::function<double(double)>& F, double half_line_integral,
                        double r) {
    if (!(r > 0.0)) throw DomainError("step_lemma_error requires r > 0");
    double W = 60.0 / r; // sigma(-r xi) < e^{-60} beyond the layer
    double tol = std::max(1e-15, 1e-6 / (r * r));
    // int F sigma(r.) splits as the left-layer mass plus the half-line
    // integral minus the right-layer deficit; the bulk cancels exactly.
    double left = adaptive_integrate([&](double x) { return F(x) * fermi(r * x); }, -W, 0.0, tol);
    double right_deficit =
        adaptive_integrate([&](double x) { return F(x) * fermi(-r * x); }, 0.0, W, tol);
    double full = left + (half_line_integral - right_deficit);
    return std::fabs(full - half_line_integral);
}

} // namespace kpztail
