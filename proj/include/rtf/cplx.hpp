#ifndef RTF_CPLX_HPP
#include <type_traits>
#define RTF_CPLX_HPP

// Complex numbers over a generic real type (std::complex is only
// specified for the builtin floating types, so DDouble needs its own).
// Principal branches throughout: arg in (-pi, pi], log and powers cut
// along the negative real axis.

#include "rtf/numeric.hpp"

namespace rtf {

template <class R>
struct Cplx {
    R re, im;

    template <class T>
    static R cvt(const T& v) {
        if constexpr (std::is_same_v<T, R>) return v;
        else return R(double(v));
    }

    Cplx() : re(0.0), im(0.0) {}
    template <class T, std::enable_if_t<std::is_arithmetic_v<T> || std::is_same_v<T, R>, int> = 0>
    Cplx(const T& r) : re(cvt(r)), im(0.0) {}
    template <class T, class U,
              std::enable_if_t<(std::is_arithmetic_v<T> || std::is_same_v<T, R>) &&
                                   (std::is_arithmetic_v<U> || std::is_same_v<U, R>),
                               int> = 0>
    Cplx(const T& r, const U& i) : re(cvt(r)), im(cvt(i)) {}

    friend Cplx operator+(Cplx a, Cplx b) { return Cplx(a.re + b.re, a.im + b.im); }
    friend Cplx operator-(Cplx a, Cplx b) { return Cplx(a.re - b.re, a.im - b.im); }
    friend Cplx operator-(Cplx a) { return Cplx(-a.re, -a.im); }
    friend Cplx operator*(Cplx a, Cplx b) {
        return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Cplx operator*(R a, Cplx b) { return Cplx(a * b.re, a * b.im); }
    friend Cplx operator*(Cplx a, R b) { return Cplx(a.re * b, a.im * b); }
    friend Cplx operator/(Cplx a, Cplx b) {
        // Smith's algorithm, scale-robust
        R abr = fabs(b.re), abi = fabs(b.im);
        if (abr >= abi) {
            R t = b.im / b.re;
            R d = b.re + b.im * t;
            return Cplx((a.re + a.im * t) / d, (a.im - a.re * t) / d);
        }
        R t = b.re / b.im;
        R d = b.re * t + b.im;
        return Cplx((a.re * t + a.im) / d, (a.im * t - a.re) / d);
    }
    friend Cplx operator/(Cplx a, R b) { return Cplx(a.re / b, a.im / b); }

    Cplx& operator+=(Cplx b) { *this = *this + b; return *this; }
    Cplx& operator-=(Cplx b) { *this = *this - b; return *this; }
    Cplx& operator*=(Cplx b) { *this = *this * b; return *this; }
    Cplx& operator/=(Cplx b) { *this = *this / b; return *this; }

    friend bool operator==(Cplx a, Cplx b) { return a.re == b.re && a.im == b.im; }
};

template <class R> Cplx<R> conj(Cplx<R> z) { return Cplx<R>(z.re, -z.im); }

template <class R> R abs(Cplx<R> z) {
    R ar = fabs(z.re), ai = fabs(z.im);
    if (ar == R(0.0) && ai == R(0.0)) return R(0.0);
    R mx = (ar > ai) ? ar : ai;
    R mn = (ar > ai) ? ai : ar;
    R q = mn / mx;
    return mx * sqrt(R(1.0) + q * q);
}

template <class R> R arg(Cplx<R> z) { return atan2(z.im, z.re); }

template <class R> Cplx<R> exp(Cplx<R> z) {
    R e = exp(z.re), s, c;
    sincos(z.im, s, c);
    return Cplx<R>(e * c, e * s);
}

template <class R> Cplx<R> log(Cplx<R> z) {
    return Cplx<R>(log(abs(z)), arg(z));
}

template <class R> Cplx<R> sqrt(Cplx<R> z) {
    R m = abs(z);
    if (m == R(0.0)) return Cplx<R>(R(0.0), R(0.0));
    R u = sqrt((m + fabs(z.re)) / R(2.0));
    R v = z.im / (R(2.0) * u);
    if (to_double(z.re) >= 0.0) return Cplx<R>(u, v);
    R s = (to_double(z.im) >= 0.0) ? R(1.0) : R(-1.0);
    return Cplx<R>(fabs(v), s * u);
}

template <class R> Cplx<R> sin(Cplx<R> z) {
    R s, c;
    sincos(z.re, s, c);
    return Cplx<R>(s * cosh(z.im), c * sinh(z.im));
}

template <class R> Cplx<R> cos(Cplx<R> z) {
    R s, c;
    sincos(z.re, s, c);
    return Cplx<R>(c * cosh(z.im), -s * sinh(z.im));
}

template <class R> Cplx<R> pow(Cplx<R> z, Cplx<R> w) { return exp(w * log(z)); }

// x^w for real x > 0: the workhorse for m^s, (n/m)^{k/2}, ... ; the
// logarithm is real so no branch questions arise.
template <class R> Cplx<R> rpow(R x, Cplx<R> w) {
    R lx = log(x);
    return exp(Cplx<R>(w.re * lx, w.im * lx));
}

template <class R> Cplx<R> inv(Cplx<R> z) { return Cplx<R>(R(1.0), R(0.0)) / z; }

template <class R> bool is_finite(Cplx<R> z) { return isfinite(z.re) && isfinite(z.im); }

using CplxD = Cplx<double>;

} // namespace rtf

#endif
