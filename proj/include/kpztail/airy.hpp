#ifndef KPZTAIL_AIRY_HPP
#define KPZTAIL_AIRY_HPP

#include "kpztail/dd.hpp"

namespace kpztail {

template <typename Real>
struct AiryPairT {
    Real ai;
    Real ai_prime;
};

using AiryPair = AiryPairT<double>;

// Ai(x) and Ai'(x) on the real line. Compensated Maclaurin series for
// |x| <= 9, scaled asymptotic expansions beyond (exponentially small values
// are produced without premature underflow). Relative error is at the 1e-13
// level or better across the supported range [-300, +inf).
AiryPair airy_eval(double x);
AiryPairT<DD> airy_eval_dd(DD x);

// Airy kernel (Ai(u)Ai'(v) - Ai'(u)Ai(v))/(u - v), with the diagonal limit
// Ai'(u)^2 - u Ai(u)^2 and a first-order Taylor correction used when
// |u - v| <= 1e-6 (1 + |u|). Symmetric in (u, v) exactly.
double airy_kernel(double u, double v);
DD airy_kernel_dd(DD u, DD v);

} // namespace kpztail

#endif
