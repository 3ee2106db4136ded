#include "kpztail/asymptotics.hpp"

#include <cmath>

namespace kpztail {

namespace {
const double kPi2 = M_PI * M_PI;
const double kPi4 = kPi2 * kPi2;
const double kPi6 = kPi4 * kPi2;
} // namespace

double AsymptoticBreakdown::operator[](const std::string& name) const {
    for (const auto& [n, v] : terms)
        if (n == name) return v;
    throw DomainError("unknown asymptotic term: " + name);
}

double sqrt1p_pi2y_m1(double y) {
    double x = kPi2 * y;
    return x / (std::sqrt(1.0 + x) + 1.0);
}

double rate_phi(double y) {
    if (y < 0.0) throw DomainError("rate_phi requires y >= 0");
    double q = sqrt1p_pi2y_m1(y);
    return q * q * q * (2.0 / 3.0 + q * (5.0 / 6.0 + q * (4.0 / 15.0))) / kPi6;
}

AsymptoticBreakdown log_q_asymptotic(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("log_q_asymptotic requires s > 0");
    double y = p.s / std::cbrt(p.T * p.T);
    AsymptoticBreakdown b;
    b.add("T2_phi", -p.T * p.T * rate_phi(y));
    b.add("sqrt_correction", -(1.0 + sqrt1p_pi2y_m1(y)) / 6.0);
    return b;
}

AsymptoticBreakdown log_q_expansion_fixed_T(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("log_q_expansion_fixed_T requires s > 0");
    double s = p.s, t13 = p.t13();
    double t23 = t13 * t13, T = p.T;
    double t43 = T * t13, t53 = T * t23;
    double rs = std::sqrt(s);
    AsymptoticBreakdown b;
    b.add("s52", -(4.0 / (15.0 * M_PI)) * t13 * s * s * rs);
    b.add("s2", t23 / (2.0 * kPi2) * s * s);
    b.add("s32", -(2.0 * T / (3.0 * M_PI * kPi2)) * s * rs);
    b.add("s1", 2.0 * t43 / (3.0 * kPi4) * s);
    b.add("s12_pi", -(M_PI / (6.0 * t13)) * rs);
    b.add("s12_pi5", -(t53 / (2.0 * M_PI * kPi4)) * rs);
    return b;
}

AsymptoticBreakdown tw_tail_expansion(double s) {
    if (!(s > 0.0)) throw DomainError("tw_tail_expansion requires s > 0");
    AsymptoticBreakdown b;
    b.add("tw_cubic", -s * s * s / 12.0);
    b.add("tw_log", -std::log(s) / 8.0);
    b.add("tw_const", std::log(2.0) / 24.0 + kZetaPrimeMinusOne);
    return b;
}

double naive_estimate(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("naive_estimate requires s > 0");
    return -(4.0 / (15.0 * M_PI)) * p.t13() * p.s * p.s * std::sqrt(p.s);
}

TailBracket kpz_tail_bracket(const Params& p, double epsilon,
                             const std::function<double(double, double)>& q_eval) {
    if (!(p.s > 1.0)) throw DomainError("kpz_tail_bracket requires s > 1");
    if (!(epsilon > 0.0)) throw DomainError("kpz_tail_bracket requires epsilon > 0");
    double s_tilde = p.s + (3.0 + epsilon) / p.t13() * std::log(p.s);
    double q_shifted = q_eval(s_tilde, p.T);
    // Remainder e^{-s^{3+eps}} must be at most half of e^{q(s_tilde)} for the
    // lower bound P >= 2 Q(s_tilde, T) - remainder to close.
    double log_remainder = -std::pow(p.s, 3.0 + epsilon);
    if (!(log_remainder <= std::log(0.5) + q_shifted))
        throw DominanceNotEstablished("e^{-s^{3+eps}} not dominated at this s");
    TailBracket tb;
    tb.epsilon = epsilon;
    tb.s_tilde = s_tilde;
    tb.lower_A = std::log(2.0) + q_shifted;
    tb.upper_B = q_eval(p.s, p.T) + 1.0;
    return tb;
}

AsymptoticBreakdown dlogq_dT_asymptotic(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("dlogq_dT_asymptotic requires s > 0");
    double q = sqrt1p_pi2y_m1(p.s / std::cbrt(p.T * p.T));
    double q2 = q * q, q4 = q2 * q2;
    AsymptoticBreakdown b;
    b.add("q5", -(4.0 * p.T / (45.0 * kPi6)) * q4 * q);
    b.add("q4", -(p.T / (9.0 * kPi6)) * q4);
    b.add("sqrt_over_T", (1.0 + q) / (18.0 * p.T));
    return b;
}

AsymptoticBreakdown dlogq_ds_asymptotic(const Params& p) {
    if (!(p.s > 0.0)) throw DomainError("dlogq_ds_asymptotic requires s > 0");
    double t43 = p.T * p.t13();
    double q = sqrt1p_pi2y_m1(p.s / std::cbrt(p.T * p.T));
    AsymptoticBreakdown b;
    b.add("q3", -(2.0 * t43 / (3.0 * kPi4)) * q * q * q);
    b.add("q2", -(t43 / kPi4) * q * q);
    b.add("s_half", -M_PI / (12.0 * std::sqrt(p.s) * p.t13()));
    return b;
}

} // namespace kpztail
