#ifndef KPZTAIL_DD_HPP
#define KPZTAIL_DD_HPP

#include <cmath>
#include <limits>

namespace kpztail {

// Double-double scalar: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Gives ~32 significant digits, enough to resolve determinant eigenvalues
// that sit within double roundoff of 1.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd_detail

inline DD operator+(DD a, DD b) {
    using namespace dd_detail;
    DD s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    using namespace dd_detail;
    DD p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline DD operator/(DD a, DD b) {
    using namespace dd_detail;
    double q1 = a.hi / b.hi;
    DD r = a - DD(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - DD(q2) * b;
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }
inline DD& operator/=(DD& a, DD b) { a = a / b; return a; }

inline bool operator<(DD a, DD b)  { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b)  { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DD a, DD b) { return !(a == b); }

inline DD fabs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline DD abs(DD a) { return fabs(a); }

inline DD sqrt(DD a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    double x = std::sqrt(a.hi);
    // one Newton step on x -> (x + a/x)/2 in double-double
    DD r = (DD(x) + a / DD(x)) * DD(0.5);
    return r;
}

inline double to_double(DD a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

// Scalar traits shared by the double / double-double code paths.
template <typename Real>
struct real_traits;

template <>
struct real_traits<double> {
    static constexpr double eps() { return std::numeric_limits<double>::epsilon() / 2; }
    // Absolute accuracy floor of assembled kernel entries (Airy evaluation is
    // eps-accurate in double, so roundoff alone sets the floor).
    static constexpr double entry_floor() { return 0.0; }
    static double from(double x) { return x; }
};

template <>
struct real_traits<DD> {
    static constexpr double eps() { return 1.23e-32; } // 2^-106
    // The double-double Airy series loses ~e^{zeta(x)} digits to cancellation;
    // near the series/asymptotic switch at x ~ 9 that is e^18 ~ 7e7 of the
    // 1e-32 unit roundoff, i.e. ~1e-24-scale absolute entry errors. Kernel
    // matrices sampling that region pick up spurious eigenvalues of the same
    // size, so the spectrum guard must not flag them.
    static constexpr double entry_floor() { return 1e-23; }
    static DD from(double x) { return DD(x); }
};

} // namespace kpztail

#endif
