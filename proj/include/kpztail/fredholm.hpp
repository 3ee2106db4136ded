#ifndef KPZTAIL_FREDHOLM_HPP
#define KPZTAIL_FREDHOLM_HPP

#include <vector>

#include "kpztail/kernels.hpp"
#include "kpztail/logdet.hpp"
#include "kpztail/quadrature.hpp"

namespace kpztail {

struct FredholmResult {
    double log_det;       // log Q(s,T) <= 0
    int order;            // quadrature size
    KernelRep rep;
    double error_estimate; // |value(order) - value(order/2)|
    Precision precision;
};

// log Q(s,T) by Nystrom discretization of det(1 - K), with symmetric
// square-root weighting M(i,j) = sqrt(w_i) K(x_i,x_j) sqrt(w_j).
// The error estimate is the order-doubling difference against order/2.
FredholmResult log_q(const Params& p, KernelRep rep, int order,
                     Precision precision = Precision::standard);

// log F^TW(x) = log det(1 - K^Ai) on L^2(x, +inf).
double tracy_widom_log_cdf(double x, int order, Precision precision = Precision::standard);

// Central finite differences of log Q; h <= 0 selects the default step
// max(1e-3, 1e-2 sqrt|s|).
double dlog_q_ds(const Params& p, double h, KernelRep rep, int order,
                 Precision precision = Precision::standard);
double dlog_q_dT(const Params& p, double h, KernelRep rep, int order,
                 Precision precision = Precision::standard);

double default_fd_step(double s);

struct ScanRow {
    int order;
    double log_det;
    double error_estimate;
};

// log Q over a strictly ascending list of orders.
std::vector<ScanRow> convergence_scan(const Params& p, KernelRep rep,
                                      const std::vector<int>& orders,
                                      Precision precision = Precision::standard);

} // namespace kpztail

#endif
