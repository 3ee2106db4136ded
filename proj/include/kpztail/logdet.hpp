#ifndef KPZTAIL_LOGDET_HPP
#define KPZTAIL_LOGDET_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "kpztail/dd.hpp"
#include "kpztail/errors.hpp"

namespace kpztail {

// Dense symmetric storage: only i <= j is kept, so entries(i,j) == entries(j,i)
// holds exactly by construction.
template <typename Real>
class SymmetricMatrixT {
public:
    explicit SymmetricMatrixT(std::size_t order)
        : n_(order), data_(order * (order + 1) / 2, Real(0)) {
        if (order == 0) throw DomainError("matrix order must be positive");
    }

    std::size_t order() const { return n_; }

    Real& at(std::size_t i, std::size_t j) {
        return data_[index(i, j)];
    }
    const Real& operator()(std::size_t i, std::size_t j) const {
        return data_[index(i, j)];
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i - 1) / 2 + (j - i);
    }
    std::size_t n_;
    std::vector<Real> data_;
};

using SymmetricMatrix = SymmetricMatrixT<double>;
using SymmetricMatrixDD = SymmetricMatrixT<DD>;

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Jacobi keeps
// high relative accuracy on PSD matrices, which is what the near-1 spectrum
// guard needs, and it works unchanged for the double-double scalar.
template <typename Real>
std::vector<Real> symmetric_eigenvalues(const SymmetricMatrixT<Real>& m) {
    const std::size_t n = m.order();
    std::vector<Real> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m(i, j);

    using std::sqrt;
    using std::fabs;
    const double eps = real_traits<Real>::eps();
    Real frob(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            frob += a[i * n + j] * a[i * n + j];
    double thresh_final = eps * std::sqrt(std::max(to_double(frob), 1e-300));

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += to_double(a[p * n + q] * a[p * n + q]);
        off = std::sqrt(off);
        if (off <= thresh_final) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Real apq = a[p * n + q];
                if (to_double(fabs(apq)) <= thresh_final / (double)n) continue;
                Real app = a[p * n + p], aqq = a[q * n + q];
                Real tau = (aqq - app) / (Real(2) * apq);
                Real t;
                if (to_double(tau) >= 0.0)
                    t = Real(1) / (tau + sqrt(Real(1) + tau * tau));
                else
                    t = Real(-1) / (-tau + sqrt(Real(1) + tau * tau));
                Real c = Real(1) / sqrt(Real(1) + t * t);
                Real s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = Real(0);
                a[q * n + p] = Real(0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    Real akp = a[k * n + p], akq = a[k * n + q];
                    Real new_kp = c * akp - s * akq;
                    Real new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp; a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq; a[q * n + k] = new_kq;
                }
            }
        }
    }
    std::vector<Real> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

// log(1 - mu) with mu given to double-double accuracy: the gap 1 - mu is
// formed in extended arithmetic, the log itself only needs double.
inline double log1m(double mu) { return std::log1p(-mu); }
inline double log1m(DD mu) {
    DD x = DD(1) - mu;
    double xh = x.hi + x.lo;
    return std::log(xh);
}

// log det(1 - M) = sum_i log(1 - mu_i) over the eigenvalues of M.
// Requires the spectrum inside [0, 1); the guard tolerance scales with the
// precision mode (8 * unit roundoff * order).
template <typename Real>
double log_det_one_minus_t(const SymmetricMatrixT<Real>& m) {
    const std::size_t n = m.order();
    const double guard =
        (8.0 * real_traits<Real>::eps() + real_traits<Real>::entry_floor()) * (double)n;
    auto eig = symmetric_eigenvalues(m);
    double sum = 0.0;
    for (const Real& mu : eig) {
        double mu_d = to_double(mu);
        if (mu_d >= 1.0 - guard || mu_d < -guard) {
            char msg[96];
            std::snprintf(msg, sizeof(msg), "eigenvalue %.6e outside [-g, 1-g), g=%.2e",
                          mu_d, guard);
            throw SpectrumOutOfRange(msg);
        }
        sum += log1m(mu);
    }
    return sum;
}

inline double log_det_one_minus(const SymmetricMatrix& m) {
    return log_det_one_minus_t<double>(m);
}
inline double log_det_one_minus(const SymmetricMatrixDD& m) {
    return log_det_one_minus_t<DD>(m);
}

} // namespace kpztail

#endif
