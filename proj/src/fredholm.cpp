#include "kpztail/fredholm.hpp"

#include <algorithm>
#include <cmath>

#include "kpztail/parallel.hpp"

namespace kpztail {

using std::sqrt;

namespace {

// Domain of the sigma-weighted representation: the kernel is cut where
// sigma(T^{1/3}(x+s)) <= e^{-20} on the left (trace of the discarded part is
// below ~3e-9, while a longer domain would put the left endpoint so deep in
// the oscillatory Airy region that moderate Gauss orders cannot resolve it)
// and where the Airy diagonal has decayed past ~1e-18 on the right.
constexpr double kSigmaCut = 20.0;
constexpr double kXMax = 12.0;

template <typename Real>
double log_q_sigma(const Params& p, int order) {
    double t13 = p.t13();
    double a = -p.s - kSigmaCut / t13;
    double b = std::max(kXMax, a + 8.0);
    auto rule = map_rule_t<Real>(gauss_legendre_t<Real>(order), DomainMap::affine(a, b));

    const std::size_t n = rule.size();
    std::vector<Real> f(n); // sqrt(w_i sigma_i)
    for (std::size_t i = 0; i < n; ++i) {
        double sig = fermi(t13 * (to_double(rule.nodes[i]) + p.s));
        f[i] = sqrt(rule.weights[i] * real_traits<Real>::from(sig));
    }
    SymmetricMatrixT<Real> m(n);
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i; j < n; ++j) {
            Real k = [&] {
                if constexpr (std::is_same_v<Real, DD>)
                    return airy_kernel_dd(rule.nodes[i], rule.nodes[j]);
                else
                    return airy_kernel(rule.nodes[i], rule.nodes[j]);
            }();
            m.at(i, j) = f[i] * k * f[j];
        }
    });
    return log_det_one_minus_t<Real>(m);
}

template <typename Real>
double log_q_finite_t(const Params& p, int order) {
    // x-domain (-s, +inf) through the algebraic half-line map.
    double L = std::max(5.0, p.s);
    auto rule = map_rule_t<Real>(gauss_legendre_t<Real>(order),
                                 DomainMap::half_line(-p.s, L));
    const std::size_t n = rule.size();

    auto r_rule = finite_temperature_r_rule(p, -p.s);
    const std::size_t nr = r_rule.size();
    double t13 = p.t13();

    // K_T(x_i, x_j) = sum_k c_k Ai(x_i + r_k) Ai(x_j + r_k) with
    // c_k = rho_k sigma(T^{1/3} r_k): the weighted matrix is A A^T, which is
    // symmetric PSD by construction.
    std::vector<Real> a_mat(n * nr);
    parallel_for(n, [&](std::size_t i) {
        Real sw = sqrt(rule.weights[i]);
        for (std::size_t k = 0; k < nr; ++k) {
            double ck = r_rule.weights[k] * fermi(t13 * r_rule.nodes[k]);
            Real arg = rule.nodes[i] + real_traits<Real>::from(r_rule.nodes[k]);
            Real ai = [&] {
                if constexpr (std::is_same_v<Real, DD>) return airy_eval_dd(arg).ai;
                else return airy_eval(arg).ai;
            }();
            a_mat[i * nr + k] = sw * sqrt(real_traits<Real>::from(ck)) * ai;
        }
    });
    SymmetricMatrixT<Real> m(n);
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i; j < n; ++j) {
            Real acc(0);
            for (std::size_t k = 0; k < nr; ++k)
                acc += a_mat[i * nr + k] * a_mat[j * nr + k];
            m.at(i, j) = acc;
        }
    });
    return log_det_one_minus_t<Real>(m);
}

template <typename Real>
double log_tw(double x, int order) {
    auto rule = map_rule_t<Real>(gauss_legendre_t<Real>(order),
                                 DomainMap::affine(x, std::max(x + 1.0, kXMax)));
    const std::size_t n = rule.size();
    SymmetricMatrixT<Real> m(n);
    parallel_for(n, [&](std::size_t i) {
        Real swi = sqrt(rule.weights[i]);
        for (std::size_t j = i; j < n; ++j) {
            Real k = [&] {
                if constexpr (std::is_same_v<Real, DD>)
                    return airy_kernel_dd(rule.nodes[i], rule.nodes[j]);
                else
                    return airy_kernel(rule.nodes[i], rule.nodes[j]);
            }();
            m.at(i, j) = swi * k * sqrt(rule.weights[j]);
        }
    });
    return log_det_one_minus_t<Real>(m);
}

double log_q_value(const Params& p, KernelRep rep, int order, Precision prec) {
    if (prec == Precision::extended) {
        return rep == KernelRep::SigmaWeighted ? log_q_sigma<DD>(p, order)
                                               : log_q_finite_t<DD>(p, order);
    }
    return rep == KernelRep::SigmaWeighted ? log_q_sigma<double>(p, order)
                                           : log_q_finite_t<double>(p, order);
}

} // namespace

FredholmResult log_q(const Params& p, KernelRep rep, int order, Precision precision) {
    if (order < 8) throw DomainError("log_q requires order >= 8");
    double value = log_q_value(p, rep, order, precision);
    double coarse = log_q_value(p, rep, order / 2, precision);
    return {value, order, rep, std::fabs(value - coarse), precision};
}

double tracy_widom_log_cdf(double x, int order, Precision precision) {
    if (order < 8) throw DomainError("tracy_widom_log_cdf requires order >= 8");
    return precision == Precision::extended ? log_tw<DD>(x, order) : log_tw<double>(x, order);
}

double default_fd_step(double s) {
    return std::max(1e-3, 1e-2 * std::sqrt(std::fabs(s)));
}

double dlog_q_ds(const Params& p, double h, KernelRep rep, int order, Precision precision) {
    if (h <= 0.0) h = default_fd_step(p.s);
    double up = log_q_value(Params(p.s + h, p.T), rep, order, precision);
    double dn = log_q_value(Params(p.s - h, p.T), rep, order, precision);
    return (up - dn) / (2.0 * h);
}

double dlog_q_dT(const Params& p, double h, KernelRep rep, int order, Precision precision) {
    if (h <= 0.0) h = std::min(default_fd_step(p.s), 0.4 * p.T);
    double up = log_q_value(Params(p.s, p.T + h), rep, order, precision);
    double dn = log_q_value(Params(p.s, p.T - h), rep, order, precision);
    return (up - dn) / (2.0 * h);
}

std::vector<ScanRow> convergence_scan(const Params& p, KernelRep rep,
                                      const std::vector<int>& orders, Precision precision) {
    for (std::size_t i = 0; i + 1 < orders.size(); ++i)
        if (orders[i + 1] <= orders[i])
            throw DomainError("convergence_scan orders must be strictly ascending");
    std::vector<ScanRow> rows;
    rows.reserve(orders.size());
    for (int n : orders) {
        FredholmResult r = log_q(p, rep, n, precision);
        rows.push_back({n, r.log_det, r.error_estimate});
    }
    return rows;
}

} // namespace kpztail
