#ifndef KPZTAIL_ASYMPTOTICS_HPP
#define KPZTAIL_ASYMPTOTICS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kpztail/kernels.hpp"

namespace kpztail {

// zeta'(-1), frozen from a high-precision zeta-derivative evaluation.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

// A closed-form value split into named additive terms.
struct AsymptoticBreakdown {
    std::vector<std::pair<std::string, double>> terms;
    double total = 0.0;

    void add(std::string name, double value) {
        terms.emplace_back(std::move(name), value);
        total += value;
    }
    double operator[](const std::string& name) const;
};

// Bracket on log P(Upsilon_T < -s) from the tail bounds.
struct TailBracket {
    double lower_A;
    double upper_B;
    double s_tilde;
    double epsilon;
};

// sqrt(1 + pi^2 y) - 1 evaluated as pi^2 y / (sqrt(1+pi^2 y) + 1).
double sqrt1p_pi2y_m1(double y);

// Large-deviation rate function
//   phi(y) = (4/(15 pi^6))(1+pi^2 y)^{5/2} - 4/(15 pi^6) - (2/(3 pi^4)) y - y^2/(2 pi^2),
// evaluated in the cancellation-free form q^3 (2/3 + 5q/6 + 4q^2/15)/pi^6
// with q = sqrt(1+pi^2 y) - 1 (the first three Taylor terms vanish exactly).
double rate_phi(double y);

// Leading lower-tail form: total = -T^2 phi(s T^{-2/3}) - (1/6) sqrt(1 + pi^2 s T^{-2/3}).
AsymptoticBreakdown log_q_asymptotic(const Params& p);

// Fixed-T expansion in powers of s: six monomials from s^{5/2} down to s^{1/2}.
AsymptoticBreakdown log_q_expansion_fixed_T(const Params& p);

// Tracy-Widom lower tail: -s^3/12 - (1/8) log s + (1/24) log 2 + zeta'(-1).
AsymptoticBreakdown tw_tail_expansion(double s);

// Heuristic leading term -(4/(15 pi)) T^{1/3} s^{5/2}.
double naive_estimate(const Params& p);

// Tail bracket log(2) + q_eval(s_tilde) <= log P(Upsilon_T < -s) <= q_eval(s) + 1
// with s_tilde = s + (3+eps) T^{-1/3} log s. Throws DominanceNotEstablished
// when the remainder e^{-s^{3+eps}} is not dominated by e^{q_eval(s_tilde)}/2.
TailBracket kpz_tail_bracket(const Params& p, double epsilon,
                             const std::function<double(double, double)>& q_eval);

// d/dT log Q asymptotics: -(4T/(45 pi^6)) q^5 - (T/(9 pi^6)) q^4 + (1+q)/(18 T).
AsymptoticBreakdown dlogq_dT_asymptotic(const Params& p);

// d/ds log Q asymptotics:
//   -(2 T^{4/3}/(3 pi^4)) q^3 - (T^{4/3}/pi^4) q^2 - pi/(12 sqrt(s) T^{1/3}).
AsymptoticBreakdown dlogq_ds_asymptotic(const Params& p);

} // namespace kpztail

#endif
