#ifndef KPZTAIL_EQUILIBRIUM_HPP
#define KPZTAIL_EQUILIBRIUM_HPP

#include <functional>

#include "kpztail/kernels.hpp"

namespace kpztail {

// Endpoint data of the equilibrium measure: the soft-edge location lambda0
// together with the defect of the endpoint equation and the edge weight.
struct EquilibriumData {
    Params p;
    double lambda0;
    double residual;       // |endpoint-equation defect| at lambda0
    double w_at_endpoint;  // w(lambda0), >= 1
};

// Effective potential V(lambda) = s^{-3/2} log(1 - sigma(s T^{1/3} lambda)),
// evaluated as -s^{-3/2} log(1 + e^{s T^{1/3} lambda}) so it never underflows.
double potential_v(double lambda, const Params& p);

// V'(lambda) = -s^{-1/2} T^{1/3} sigma(s T^{1/3} lambda).
double potential_v_prime(double lambda, const Params& p);

// Solve the endpoint equation
//   lambda0 = 1 - (2 s^{-1/2} T^{1/3} / pi) int_0^inf sigma(s T^{1/3}(lambda0 - v^2)) dv
// by bracketed bisection refined with Newton steps. Throws NoConvergence if
// the iteration cap is hit.
EquilibriumData solve_lambda0(const Params& p, double tol = 1e-12);

// Closed-form main term of the endpoint:
//   lambda0 ~ (T^{2/3} / (pi^2 s)) (sqrt(1 + pi^2 s T^{-2/3}) - 1)^2,
// accurate to O(s^{-5/2} T^{-1/3}).
double lambda0_asymptotic(const Params& p);

// Density-side quantity psi(lambda) = 2 sqrt(lambda0-lambda) w(lambda) for
// lambda < lambda0, computed from the absolutely convergent log-kernel form
//   psi = 2 sqrt(lambda0-lambda)
//       + (s^{-1/2} T^{1/3}/pi) int log[(sqrt(lambda0-lambda)+sqrt(lambda0-xi))
//                                       /|sqrt(lambda0-lambda)-sqrt(lambda0-xi)|] dsigma(s T^{1/3} xi).
double psi(double lambda, const EquilibriumData& eq);

// Edge weight
//   w(lambda) = 1 + (s^{-1/2} T^{1/3} / 2pi)
//               int_{-inf}^{lambda0} [sigma(sT^{1/3} xi) - sigma(sT^{1/3} lambda)]
//                                     / (sqrt(lambda0-xi)(xi-lambda)) dxi,
// with the removable xi = lambda singularity handled analytically.
double w_at(double lambda, const EquilibriumData& eq);

// 2g(lambda) - V(lambda) + V(lambda0) = 2 int_{lambda0}^{lambda}
// sqrt(eta-lambda0) w(eta) deta for lambda > lambda0, with the square-root
// endpoint absorbed by eta = lambda0 + tau^2.
double g_combination(double lambda, const EquilibriumData& eq);

// Step-approximation error |int F(xi) sigma(r xi) dxi - int_0^inf F(xi) dxi|
// for a test function F with known half-line integral. Adaptive quadrature of
// the two boundary-layer deficits near xi = 0.
double step_lemma_error(const std::function<double(double)>& F, double half_line_integral,
                        double r);

} // namespace kpztail

#endif
