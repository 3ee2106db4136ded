#include "kpztail/airy.hpp"

#include <array>
#include <cmath>

#include "kpztail/errors.hpp"

namespace kpztail {

namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3), stored as
// double-double pairs (values beyond double precision from a 50-digit
// series evaluation).
const DD kAi0{0.3550280538878172, 2.05233632436212e-17};
const DD kAip0{-0.2588194037928068, 2.522243111610832e-17};

constexpr double kSeriesSwitch = 9.0;
constexpr double kLeftLimit = -300.0;

// u_k / v_k coefficients of the large-argument expansions,
// u_0 = v_0 = 1, u_{k+1}/u_k = (3k+1/2)(3k+3/2)(3k+5/2) / (54 (k+1)(k+1/2)),
// v_k = (6k+1)/(1-6k) u_k.
constexpr int kAsymTerms = 48;

struct AsymCoeffs {
    std::array<double, kAsymTerms> u{}, v{};
    AsymCoeffs() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 0; k + 1 < kAsymTerms; ++k) {
            double r = (3 * k + 0.5) * (3 * k + 1.5) * (3 * k + 2.5) /
                       (54.0 * (k + 1) * (k + 0.5));
            u[k + 1] = u[k] * r;
            v[k + 1] = u[k + 1] * (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1));
        }
    }
};

const AsymCoeffs kCoeffs;

// Alternating asymptotic sum sum_k (-1)^k c_k zeta^-k truncated at the
// smallest term.
double asym_sum(const std::array<double, kAsymTerms>& c, double inv_zeta) {
    double sum = c[0];
    double prev = std::fabs(c[0]);
    double power = 1.0;
    double sign = -1.0;
    for (int k = 1; k < kAsymTerms; ++k) {
        power *= inv_zeta;
        double term = c[k] * power;
        if (std::fabs(term) >= prev) break; // series started diverging
        sum += sign * term;
        prev = std::fabs(term);
        sign = -sign;
        if (prev < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// Even / odd sub-sums of the oscillatory expansion:
//   P = sum (-1)^k c_{2k} zeta^{-2k},  Q = sum (-1)^k c_{2k+1} zeta^{-2k-1}.
void asym_sum_oscillatory(const std::array<double, kAsymTerms>& c, double inv_zeta,
                          double& even, double& odd) {
    even = c[0];
    odd = c[1] * inv_zeta;
    double prev = std::fabs(c[1] * inv_zeta);
    double power = inv_zeta;
    for (int k = 2; k < kAsymTerms; ++k) {
        power *= inv_zeta;
        double term = c[k] * power;
        if (std::fabs(term) >= prev) break;
        double signed_term = ((k / 2) % 2 == 0 ? term : -term);
        if (k % 2 == 0) even += signed_term;
        else odd += signed_term;
        prev = std::fabs(term);
        if (prev < 1e-18) break;
    }
}

AiryPairT<DD> airy_series_dd(DD x) {
    // f'' = x f with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1:
    //   f = sum c_k x^{3k},        c_{k+1} = c_k/((3k+2)(3k+3))
    //   g = sum d_k x^{3k+1},      d_{k+1} = d_k/((3k+3)(3k+4))
    // Summed in double-double: for oscillatory arguments the cancellation
    // in Ai = Ai(0) f + Ai'(0) g eats ~|x|^{3/2} digits.
    if (to_double(fabs(x)) < 1e-30) return {kAi0, kAip0};
    DD x3 = x * x * x;
    DD f(1), fp(0), g = x, gp(1);
    DD tf(1);       // c_k x^{3k}
    DD tg = x;      // d_k x^{3k+1}
    double abs_acc = 1.0 + std::fabs(to_double(x));
    for (int k = 0; k < 400; ++k) {
        DD tf_next = tf * x3 / DD((3.0 * k + 2.0) * (3.0 * k + 3.0));
        DD tg_next = tg * x3 / DD((3.0 * k + 3.0) * (3.0 * k + 4.0));
        f += tf_next;
        g += tg_next;
        fp += DD(3.0 * (k + 1)) * tf_next / x; // 3(k+1) c_{k+1} x^{3k+2}
        gp += DD(3.0 * k + 4.0) * tg_next / x;
        tf = tf_next;
        tg = tg_next;
        double m = std::fabs(to_double(tf)) + std::fabs(to_double(tg));
        abs_acc += m;
        if (m < 1e-40 * abs_acc) break;
    }
    return {kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
}

AiryPair airy_asym_positive(double x) {
    double sx = std::sqrt(x);
    double zeta = 2.0 / 3.0 * x * sx;
    double pre = 0.5 / std::sqrt(M_PI);
    double e = std::exp(-zeta); // underflows to 0 only when Ai itself does
    double x14 = std::sqrt(sx);
    double su = asym_sum(kCoeffs.u, 1.0 / zeta);
    double sv = asym_sum(kCoeffs.v, 1.0 / zeta);
    return {pre * e / x14 * su, -pre * e * x14 * sv};
}

AiryPair airy_asym_negative(double x) {
    double z = -x;
    double sz = std::sqrt(z);
    double zeta = 2.0 / 3.0 * z * sz;
    double z14 = std::sqrt(sz);
    double c = std::cos(zeta - M_PI / 4.0), s = std::sin(zeta - M_PI / 4.0);
    double pu_even, pu_odd, pv_even, pv_odd;
    asym_sum_oscillatory(kCoeffs.u, 1.0 / zeta, pu_even, pu_odd);
    asym_sum_oscillatory(kCoeffs.v, 1.0 / zeta, pv_even, pv_odd);
    double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    double ai = inv_sqrt_pi / z14 * (c * pu_even + s * pu_odd);
    double aip = inv_sqrt_pi * z14 * (s * pv_even - c * pv_odd);
    return {ai, aip};
}

void check_range(double x) {
    if (!std::isfinite(x) || x < kLeftLimit)
        throw RangeExceeded("airy_eval argument " + std::to_string(x) +
                            " outside supported range [-300, +inf)");
}

} // namespace

AiryPair airy_eval(double x) {
    check_range(x);
    if (std::fabs(x) <= kSeriesSwitch) {
        auto p = airy_series_dd(DD(x));
        return {to_double(p.ai), to_double(p.ai_prime)};
    }
    return x > 0 ? airy_asym_positive(x) : airy_asym_negative(x);
}

AiryPairT<DD> airy_eval_dd(DD x) {
    double xd = to_double(x);
    check_range(xd);
    if (std::fabs(xd) <= kSeriesSwitch) return airy_series_dd(x);
    AiryPair p = xd > 0 ? airy_asym_positive(xd) : airy_asym_negative(xd);
    return {DD(p.ai), DD(p.ai_prime)};
}

namespace {

template <typename Real>
Real airy_kernel_impl(Real u, Real v) {
    if (v < u) std::swap(u, v); // canonical order keeps symmetry exact
    double ud = to_double(u), vd = to_double(v);
    double thresh = 1e-6 * (1.0 + std::fabs(ud));
    if (std::fabs(vd - ud) <= thresh) {
        // K(u,u) = Ai'(u)^2 - u Ai(u)^2, with d/dv K(u,v)|_{v=u} = -Ai(u)^2/2;
        // evaluated at the midpoint the linear correction cancels.
        DD m = (DD(ud) + DD(vd)) * DD(0.5);
        if constexpr (std::is_same_v<Real, DD>) m = (u + v) * DD(0.5);
        AiryPairT<DD> p = airy_eval_dd(m);
        DD diag = p.ai_prime * p.ai_prime - m * p.ai * p.ai;
        if constexpr (std::is_same_v<Real, DD>) return diag;
        else return to_double(diag);
    }
    if constexpr (std::is_same_v<Real, DD>) {
        auto pu = airy_eval_dd(u);
        auto pv = airy_eval_dd(v);
        return (pu.ai * pv.ai_prime - pu.ai_prime * pv.ai) / (u - v);
    } else {
        auto pu = airy_eval(u);
        auto pv = airy_eval(v);
        return (pu.ai * pv.ai_prime - pu.ai_prime * pv.ai) / (u - v);
    }
}

} // namespace

double airy_kernel(double u, double v) { return airy_kernel_impl<double>(u, v); }
DD airy_kernel_dd(DD u, DD v) { return airy_kernel_impl<DD>(u, v); }

} // namespace kpztail
