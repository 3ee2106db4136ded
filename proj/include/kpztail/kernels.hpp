#ifndef KPZTAIL_KERNELS_HPP
#define KPZTAIL_KERNELS_HPP

#include <cmath>

#include "kpztail/airy.hpp"
#include "kpztail/errors.hpp"
#include "kpztail/quadrature.hpp"

namespace kpztail {

// Evaluation point of the deformed determinant: shift s and time T > 0.
struct Params {
    double s;
    double T;

    Params(double s_, double T_) : s(s_), T(T_) {
        if (!(T > 0.0) || !std::isfinite(s))
            throw DomainError("Params requires finite s and T > 0");
    }

    double t13() const { return std::cbrt(T); }
};

enum class KernelRep { SigmaWeighted, FiniteTemperature };

// Fermi factor 1/(1+e^{-r}); branch on the sign so neither exp overflows.
inline double fermi(double r) {
    if (r >= 0.0) return 1.0 / (1.0 + std::exp(-r));
    double e = std::exp(r);
    return e / (1.0 + e);
}

// sigma'(r) = sigma(r)(1 - sigma(r)), even in r.
inline double fermi_deriv(double r) {
    double e = std::exp(-std::fabs(r));
    double d = 1.0 + e;
    return e / (d * d);
}

// sqrt(sigma(T^{1/3}(x+s))) K^Ai(x,y) sqrt(sigma(T^{1/3}(y+s))): the
// symmetrized version of the kernel in the first determinant representation,
// determinant-equivalent by diagonal conjugation.
double sigma_weighted_kernel(double x, double y, const Params& p);

// Deformed Airy kernel int sigma(T^{1/3} r) Ai(u+r) Ai(v+r) dr evaluated on a
// supplied r-rule. Throws TruncationTooTight when the rule's window is too
// short for ~1e-12 truncation error.
double finite_temperature_kernel(double u, double v, const Params& p,
                                 const QuadratureRule& r_rule);

// Default r-rule for the kernel above: composite Gauss-Legendre on
// [-R_-, R_+] with R_- set by the decay of sigma(T^{1/3} r) and
// R_+ = 40 + max(0, -u_min) set by Airy decay.
QuadratureRule finite_temperature_r_rule(const Params& p, double u_min);

// Plain Airy kernel, restricted to (-s, +inf) at the Nystrom level: the
// sigma -> indicator limit that produces F^TW(-s).
double indicator_kernel(double x, double y, double s);

} // namespace kpztail

#endif
