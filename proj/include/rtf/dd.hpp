#ifndef RTF_DD_HPP
#define RTF_DD_HPP

// Double-double arithmetic: an unevaluated sum of two doubles giving
// ~31 significant decimal digits.  The error-free transformations
// (two_sum / two_prod) follow Dekker and Knuth; the elementary-function
// kernels follow the usual QD-library recipes (argument reduction plus
// short Taylor series, Newton refinement from a double seed).
//
// Requires -ffp-contract=off: a fused multiply-add inside two_sum would
// silently destroy the error term.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

namespace rtf {

namespace ddk {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// requires |a| >= |b|
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

} // namespace ddk

class DDouble {
public:
    double hi, lo;

    constexpr DDouble() : hi(0.0), lo(0.0) {}
    constexpr DDouble(double x) : hi(x), lo(0.0) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}
    DDouble(int x) : hi(double(x)), lo(0.0) {}
    DDouble(long x) : hi(double(x)), lo(double(x) - hi == 0.0 ? 0.0 : double(x - (long)hi)) {}

    static DDouble from_sum(double a, double b) {
        double e;
        double s = ddk::two_sum(a, b, e);
        return DDouble(s, e);
    }

    friend DDouble operator+(DDouble a, DDouble b) {
        double e1, e2;
        double s = ddk::two_sum(a.hi, b.hi, e1);
        double t = ddk::two_sum(a.lo, b.lo, e2);
        e1 += t;
        s = ddk::quick_two_sum(s, e1, e1);
        e1 += e2;
        s = ddk::quick_two_sum(s, e1, e1);
        return DDouble(s, e1);
    }
    friend DDouble operator-(DDouble a, DDouble b) { return a + DDouble(-b.hi, -b.lo); }
    friend DDouble operator-(DDouble a) { return DDouble(-a.hi, -a.lo); }

    friend DDouble operator*(DDouble a, DDouble b) {
        double e;
        double p = ddk::two_prod(a.hi, b.hi, e);
        e += a.hi * b.lo + a.lo * b.hi;
        p = ddk::quick_two_sum(p, e, e);
        return DDouble(p, e);
    }

    friend DDouble operator/(DDouble a, DDouble b) {
        double q1 = a.hi / b.hi;
        DDouble r = a - DDouble(q1) * b;
        double q2 = r.hi / b.hi;
        r = r - DDouble(q2) * b;
        double q3 = r.hi / b.hi;
        double e;
        double s = ddk::quick_two_sum(q1, q2, e);
        return DDouble(s, e) + DDouble(q3);
    }

    DDouble& operator+=(DDouble b) { *this = *this + b; return *this; }
    DDouble& operator-=(DDouble b) { *this = *this - b; return *this; }
    DDouble& operator*=(DDouble b) { *this = *this * b; return *this; }
    DDouble& operator/=(DDouble b) { *this = *this / b; return *this; }

    friend bool operator==(DDouble a, DDouble b) { return a.hi == b.hi && a.lo == b.lo; }
    friend bool operator!=(DDouble a, DDouble b) { return !(a == b); }
    friend bool operator<(DDouble a, DDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
    friend bool operator>(DDouble a, DDouble b) { return b < a; }
    friend bool operator<=(DDouble a, DDouble b) { return !(b < a); }
    friend bool operator>=(DDouble a, DDouble b) { return !(a < b); }

    explicit operator double() const { return hi; }
};

inline double to_double(DDouble x) { return x.hi; }
inline double to_double(double x) { return x; }

inline DDouble fabs(DDouble a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline bool isfinite(DDouble a) { return std::isfinite(a.hi) && std::isfinite(a.lo); }
inline DDouble ldexp(DDouble a, int e) { return DDouble(std::ldexp(a.hi, e), std::ldexp(a.lo, e)); }

inline DDouble floor(DDouble a) {
    double h = std::floor(a.hi);
    if (h != a.hi) return DDouble(h);
    // hi already integral: the fractional information is in lo
    double l = std::floor(a.lo);
    double e;
    h = ddk::quick_two_sum(h, l, e);
    return DDouble(h, e);
}

inline DDouble round_nearest(DDouble a) { return floor(a + DDouble(0.5)); }

inline DDouble sqrt(DDouble a) {
    if (a.hi == 0.0 && a.lo == 0.0) return DDouble(0.0);
    // Newton on x = sqrt(a), seeded from double
    double x0 = std::sqrt(a.hi);
    DDouble x(x0);
    x = x + (a - x * x) / (DDouble(2.0) * x);
    x = x + (a - x * x) / (DDouble(2.0) * x);
    return x;
}

namespace ddc {
// decimal string -> DDouble, good to ~1e-32 relative; used only to seed
// the handful of transcendental constants below.
inline DDouble parse(const char* s) {
    DDouble acc(0.0);
    bool neg = false;
    int frac_digits = 0;
    bool seen_point = false;
    for (const char* p = s; *p; ++p) {
        char c = *p;
        if (c == '-') { neg = true; continue; }
        if (c == '.') { seen_point = true; continue; }
        acc = acc * DDouble(10.0) + DDouble(double(c - '0'));
        if (seen_point) ++frac_digits;
    }
    for (int i = 0; i < frac_digits; ++i) acc = acc / DDouble(10.0);
    return neg ? -acc : acc;
}

inline const DDouble& pi() {
    static const DDouble v = parse("3.14159265358979323846264338327950288419716939937511");
    return v;
}
inline const DDouble& two_pi() {
    static const DDouble v = parse("6.28318530717958647692528676655900576839433879875021");
    return v;
}
inline const DDouble& half_pi() {
    static const DDouble v = parse("1.57079632679489661923132169163975144209858469968755");
    return v;
}
inline const DDouble& ln2() {
    static const DDouble v = parse("0.69314718055994530941723212145817656807550013436026");
    return v;
}
inline const DDouble& ln2pi() {
    static const DDouble v = parse("1.83787706640934548356065947281123527972279494727556");
    return v;
}
} // namespace ddc

inline DDouble exp(DDouble a) {
    // exp(a) = 2^m * exp(r)^(2^9), r = (a - m ln2)/512
    if (a.hi > 709.0) return DDouble(std::numeric_limits<double>::infinity());
    if (a.hi < -745.0) return DDouble(0.0);
    double m = std::floor(a.hi / 0.693147180559945309 + 0.5);
    DDouble r = (a - ddc::ln2() * DDouble(m));
    r = ldexp(r, -9);
    // expm1 by Taylor: r small (|r| <= ~0.0007)
    DDouble s = r, term = r;
    for (int i = 2; i <= 12; ++i) {
        term = term * r / DDouble(double(i));
        s = s + term;
        if (std::fabs(term.hi) < 1e-40 * std::fabs(s.hi)) break;
    }
    // undo the /512 by repeated squaring of (1+s): s <- s^2 + 2s
    for (int i = 0; i < 9; ++i) s = s * s + ldexp(s, 1);
    return ldexp(s + DDouble(1.0), int(m));
}

inline DDouble log(DDouble a) {
    // Newton: y_{n+1} = y_n + a*exp(-y_n) - 1
    DDouble y(std::log(a.hi));
    y = y + a * exp(-y) - DDouble(1.0);
    y = y + a * exp(-y) - DDouble(1.0);
    return y;
}

namespace ddk {
// sin/cos on |r| <= pi/4 by Taylor
inline DDouble sin_taylor(DDouble r) {
    DDouble r2 = r * r, term = r, s = r;
    for (int i = 1; i <= 20; ++i) {
        term = term * r2 / DDouble(double(2 * i) * double(2 * i + 1));
        term = -term;
        s = s + term;
        if (std::fabs(term.hi) < 1e-40 * (std::fabs(s.hi) + 1e-300)) break;
    }
    return s;
}
inline DDouble cos_taylor(DDouble r) {
    DDouble r2 = r * r, term(1.0), s(1.0);
    for (int i = 1; i <= 20; ++i) {
        term = term * r2 / DDouble(double(2 * i - 1) * double(2 * i));
        term = -term;
        s = s + term;
        if (std::fabs(term.hi) < 1e-40 * (std::fabs(s.hi) + 1e-300)) break;
    }
    return s;
}
} // namespace ddk

inline void sincos(DDouble a, DDouble& sn, DDouble& cs) {
    // reduce modulo pi/2; adequate for the argument sizes used here
    DDouble q = round_nearest(a / ddc::half_pi());
    long j = long(q.hi);
    DDouble r = a - ddc::half_pi() * q;
    DDouble s = ddk::sin_taylor(r), c = ddk::cos_taylor(r);
    switch (((j % 4) + 4) % 4) {
        case 0: sn = s;  cs = c;  break;
        case 1: sn = c;  cs = -s; break;
        case 2: sn = -s; cs = -c; break;
        default: sn = -c; cs = s; break;
    }
}

inline DDouble sin(DDouble a) { DDouble s, c; sincos(a, s, c); return s; }
inline DDouble cos(DDouble a) { DDouble s, c; sincos(a, s, c); return c; }

inline DDouble atan2(DDouble y, DDouble x) {
    if (y.hi == 0.0 && y.lo == 0.0)
        return (x.hi >= 0.0) ? DDouble(0.0) : ddc::pi();
    // Newton on theta: correction e ~ tan(theta_true - theta)
    DDouble t(std::atan2(y.hi, x.hi));
    for (int i = 0; i < 2; ++i) {
        DDouble s, c;
        sincos(t, s, c);
        DDouble e = (y * c - x * s) / (x * c + y * s);
        t = t + e;
    }
    return t;
}

inline DDouble sinh(DDouble a) { DDouble e = exp(a); return ldexp(e - DDouble(1.0) / e, -1); }
inline DDouble cosh(DDouble a) { DDouble e = exp(a); return ldexp(e + DDouble(1.0) / e, -1); }
inline DDouble tanh(DDouble a) {
    if (std::fabs(a.hi) > 40.0) return DDouble(a.hi > 0 ? 1.0 : -1.0);
    DDouble e = exp(ldexp(a, 1));
    return (e - DDouble(1.0)) / (e + DDouble(1.0));
}

inline DDouble pow(DDouble a, DDouble b) { return exp(b * log(a)); }

inline DDouble pow_int(DDouble a, long n) {
    if (n < 0) return DDouble(1.0) / pow_int(a, -n);
    DDouble r(1.0), p = a;
    while (n) {
        if (n & 1) r = r * p;
        p = p * p;
        n >>= 1;
    }
    return r;
}

} // namespace rtf

#endif
