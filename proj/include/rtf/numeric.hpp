#ifndef RTF_NUMERIC_HPP
#define RTF_NUMERIC_HPP

// Uniform access to double / DDouble: constants, conversions, epsilon.
// Generic code writes real_const<R>::pi() etc. and calls the unqualified
// math functions (found by ADL for DDouble, via the std pull-in below
// for double).

#include <cmath>
#include <string>

#include "rtf/dd.hpp"

namespace rtf {

using std::fabs;
using std::sqrt;
using std::exp;
using std::log;
using std::sin;
using std::cos;
using std::sinh;
using std::cosh;
using std::tanh;
using std::atan2;
using std::floor;
using std::pow;
using std::isfinite;
using std::ldexp;

inline double pow_int(double a, long n) {
    if (n < 0) return 1.0 / pow_int(a, -n);
    double r = 1.0, p = a;
    while (n) {
        if (n & 1) r *= p;
        p *= p;
        n >>= 1;
    }
    return r;
}

inline void sincos(double a, double& s, double& c) { s = std::sin(a); c = std::cos(a); }

template <class R> struct real_const;

template <> struct real_const<double> {
    static double pi() { return 3.14159265358979323846; }
    static double two_pi() { return 6.28318530717958647693; }
    static double half_pi() { return 1.57079632679489661923; }
    static double ln2pi() { return 1.83787706640934548356; }
    static double eps() { return 2.220446049250313e-16; }
    // truncation target for internal series/iterations
    static double tol() { return 1e-17; }
    static int digits10() { return 16; }
    static const char* name() { return "double"; }
};

template <> struct real_const<DDouble> {
    static DDouble pi() { return ddc::pi(); }
    static DDouble two_pi() { return ddc::two_pi(); }
    static DDouble half_pi() { return ddc::half_pi(); }
    static DDouble ln2pi() { return ddc::ln2pi(); }
    static DDouble eps() { return DDouble(4.93e-32); }
    static DDouble tol() { return DDouble(1e-33); }
    static int digits10() { return 31; }
    static const char* name() { return "double-double"; }
};

template <class R> R from_double(double x) { return R(x); }
template <class R> R from_long(long n) { return R(double(n)); }

template <> inline DDouble from_long<DDouble>(long n) {
    double h = double(n);
    return DDouble(h, double(n - (long)h));
}
template <> inline double from_long<double>(long n) { return double(n); }

} // namespace rtf

#endif
