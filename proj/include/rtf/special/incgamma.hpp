#ifndef RTF_SPECIAL_INCGAMMA_HPP
#define RTF_SPECIAL_INCGAMMA_HPP

// Upper incomplete gamma Gamma(s, x) for complex s and real x > 0.
// Continued fraction (modified Lentz) when x dominates, otherwise the
// lower series against a full Gamma.

#include "rtf/special/gamma.hpp"
#include "rtf/sum.hpp"

namespace rtf {

namespace detail {

template <class R>
Cplx<R> upper_gamma_cf(Cplx<R> s, R x, long cap) {
    // Gamma(s,x) = e^{-x} x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(...)))
    const R tiny = R(1e-280);
    Cplx<R> b(x + R(1.0) - s.re, -s.im);
    Cplx<R> c(R(1e280), R(0.0));
    Cplx<R> d = inv(b);
    Cplx<R> h = d;
    for (long i = 1; i <= cap; ++i) {
        Cplx<R> an = R(double(i)) * (Cplx<R>(double(i), 0.0) - s);
        an = -an;
        b += Cplx<R>(2.0, 0.0);
        d = an * d + b;
        if (to_double(abs(d)) == 0.0) d = Cplx<R>(tiny, R(0.0));
        c = b + an / c;
        if (to_double(abs(c)) == 0.0) c = Cplx<R>(tiny, R(0.0));
        d = inv(d);
        Cplx<R> delta = d * c;
        h = h * delta;
        if (to_double(abs(delta - Cplx<R>(1.0, 0.0))) < to_double(real_const<R>::eps()) * 4.0)
            return exp(s * Cplx<R>(log(x), R(0.0)) - Cplx<R>(x, R(0.0))) * h;
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction stalled");
}

template <class R>
Cplx<R> lower_gamma_series(Cplx<R> s, R x, long cap) {
    // gamma(s,x) = x^s e^{-x} sum_n x^n / (s (s+1) ... (s+n))
    Cplx<R> term = inv(s);
    CplxSum<R> sum;
    sum.add(term);
    for (long n = 1; n <= cap; ++n) {
        term = term * Cplx<R>(x, R(0.0)) / (s + Cplx<R>(double(n), 0.0));
        sum.add(term);
        if (to_double(abs(term)) < to_double(real_const<R>::eps()) * to_double(abs(sum.value())))
            return exp(s * Cplx<R>(log(x), R(0.0)) - Cplx<R>(x, R(0.0))) * sum.value();
    }
    throw ConvergenceError("upper_incomplete_gamma: series stalled");
}

} // namespace detail

template <class R>
Cplx<R> upper_incomplete_gamma(Cplx<R> s, R x, long cap = 20000) {
    if (to_double(x) <= 0.0)
        throw DomainError("upper_incomplete_gamma: requires x > 0");
    if (std::fabs(to_double(s.re)) > 60.0)
        throw DomainError("upper_incomplete_gamma: Re s outside [-60, 60]");
    if (to_double(x) > to_double(s.re) + 1.0)
        return detail::upper_gamma_cf(s, x, cap);
    return gamma(s) - detail::lower_gamma_series(s, x, cap);
}

} // namespace rtf

#endif
