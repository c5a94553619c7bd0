#ifndef RTF_SPECIAL_HYP2F1_HPP
#define RTF_SPECIAL_HYP2F1_HPP

// Gauss hypergeometric function for real argument x < 1 with complex
// parameters, plus parameter derivatives and an independent
// Euler-integral oracle.
//
// Region strategy: direct Gauss series on [0, 0.95]; the Pfaff map
// w = x/(x-1) for x < 0 (this is all the callers ever need: the error
// kernels evaluate at -n/m < 0 and at ratios <= 0.95); hard error
// beyond 0.95.  A non-positive-integer a or b terminates the series and
// is summed exactly.

#include "rtf/special/gamma.hpp"
#include "rtf/quad.hpp"
#include "rtf/sum.hpp"

namespace rtf {

template <class R>
struct EvalResult {
    Cplx<R> value;
    double err_estimate = 0.0; // |last term| x 10, scaled through transforms
    long terms_used = 0;
};

namespace detail {

inline bool is_nonpositive_int(double x, double im, double tol = 1e-12) {
    return std::fabs(im) <= tol && x <= tol &&
           std::fabs(x - std::round(x)) <= tol;
}

template <class R>
long terminating_order(Cplx<R> a) {
    double re = to_double(a.re), im = to_double(a.im);
    if (!is_nonpositive_int(re, im)) return -1;
    return long(-std::round(re));
}

// plain Gauss series at |x| < 1; stops on two consecutive negligible terms
template <class R>
EvalResult<R> gauss_series(Cplx<R> a, Cplx<R> b, Cplx<R> c, R x, long cap) {
    long na = terminating_order(a), nb = terminating_order(b);
    long jend = cap;
    bool terminating = false;
    if (na >= 0 || nb >= 0) {
        jend = (na >= 0 && nb >= 0) ? std::min(na, nb) : std::max(na, nb);
        terminating = true;
    }
    CplxSum<R> sum;
    Cplx<R> term(1.0, 0.0);
    sum.add(term);
    long used = 1;
    int small_streak = 0;
    const double eps = to_double(real_const<R>::eps());
    double last = 1.0;
    for (long j = 0; j < jend; ++j) {
        term = term * (a + Cplx<R>(double(j), 0.0)) * (b + Cplx<R>(double(j), 0.0)) /
               ((c + Cplx<R>(double(j), 0.0)) * R(double(j + 1))) * x;
        sum.add(term);
        ++used;
        last = to_double(abs(term));
        if (!terminating) {
            double scale = to_double(abs(sum.value())) + 1e-300;
            if (last <= eps * scale) {
                if (++small_streak >= 2) break;
            } else {
                small_streak = 0;
            }
            if (j == jend - 1)
                throw ConvergenceError("hyp2f1: series cap exceeded");
        }
    }
    EvalResult<R> r;
    r.value = sum.value();
    r.err_estimate = terminating ? 0.0 : last * 10.0;
    r.terms_used = used;
    return r;
}

} // namespace detail

template <class R>
EvalResult<R> hyp2f1(Cplx<R> a, Cplx<R> b, Cplx<R> c, R x, long cap = 200000) {
    if (detail::is_nonpositive_int(to_double(c.re), to_double(c.im)))
        throw DomainError("hyp2f1: c is a non-positive integer");
    double xd = to_double(x);
    if (xd >= 1.0) throw DomainError("hyp2f1: requires x < 1");

    // terminating series converge everywhere
    if (detail::terminating_order(a) >= 0 || detail::terminating_order(b) >= 0)
        return detail::gauss_series(a, b, c, x, cap);

    if (xd >= 0.0) {
        if (xd > 0.95) throw DomainError("hyp2f1: x in (0.95, 1) not supported");
        return detail::gauss_series(a, b, c, x, cap);
    }
    // Pfaff: F(a,b;c;x) = (1-x)^{-b} F(b, c-a; c; x/(x-1)), w in (0,1)
    R w = x / (x - R(1.0));
    if (to_double(w) > 0.95)
        throw DomainError("hyp2f1: Pfaff image beyond 0.95 (x too negative)");
    EvalResult<R> inner = detail::gauss_series(b, c - a, c, w, cap);
    Cplx<R> scale = rpow(R(1.0) - x, -b);
    inner.value = scale * inner.value;
    inner.err_estimate *= to_double(abs(scale));
    return inner;
}

// Parameter gradient (dF/da, dF/db, dF/dc) by term-wise differentiation.
// The term values and their three derivatives satisfy joint two-term
// recurrences that stay finite when a Pochhammer factor vanishes, so a
// non-positive-integer b (the terminating case) needs no special path:
// the j-th derivative term just keeps the product of the surviving
// factors.  Direct series only, |x| <= 0.95.
template <class R>
struct GradResult {
    Cplx<R> f, da, db, dc;
    long terms_used = 0;
};

template <class R>
GradResult<R> hyp2f1_param_grad(Cplx<R> a, Cplx<R> b, Cplx<R> c, R x, long cap = 200000) {
    if (detail::is_nonpositive_int(to_double(c.re), to_double(c.im)))
        throw DomainError("hyp2f1_param_grad: c is a non-positive integer");
    double xd = std::fabs(to_double(x));
    if (xd > 0.95) throw DomainError("hyp2f1_param_grad: requires |x| <= 0.95");

    CplxSum<R> sf, sa, sb, sc;
    Cplx<R> T(1.0, 0.0), A(0.0, 0.0), B(0.0, 0.0), C(0.0, 0.0);
    sf.add(T);
    const double eps = to_double(real_const<R>::eps());
    long used = 1;
    int small_streak = 0;
    for (long j = 0; j < cap; ++j) {
        Cplx<R> aj = a + Cplx<R>(double(j), 0.0);
        Cplx<R> bj = b + Cplx<R>(double(j), 0.0);
        Cplx<R> cj = c + Cplx<R>(double(j), 0.0);
        Cplx<R> base = Cplx<R>(x, R(0.0)) / (cj * R(double(j + 1)));
        Cplx<R> q = aj * bj * base;
        Cplx<R> Tn = T * q;
        Cplx<R> An = A * q + T * bj * base;            // d/da
        Cplx<R> Bn = B * q + T * aj * base;            // d/db
        Cplx<R> Cn = C * q - T * aj * bj * base / cj;  // d/dc
        T = Tn; A = An; B = Bn; C = Cn;
        sf.add(T);
        sa.add(A);
        sb.add(B);
        sc.add(C);
        ++used;
        double last = std::max(std::max(to_double(abs(T)), to_double(abs(A))),
                               std::max(to_double(abs(B)), to_double(abs(C))));
        double scale = to_double(abs(sf.value())) + to_double(abs(sa.value())) +
                       to_double(abs(sb.value())) + to_double(abs(sc.value())) + 1.0;
        if (last <= eps * scale) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
        if (j == cap - 1) throw ConvergenceError("hyp2f1_param_grad: series cap exceeded");
    }
    GradResult<R> g;
    g.f = sf.value();
    g.da = sa.value();
    g.db = sb.value();
    g.dc = sc.value();
    g.terms_used = used;
    return g;
}

// Independent oracle: adaptive quadrature of the Euler integral
//   F(a,b;c;x) = 1/B(b, c-b) * int_0^1 t^{b-1} (1-t)^{c-b-1} (1-x t)^{-a} dt,
// valid for Re c > Re b > 0, x < 1.
template <class R>
Cplx<R> hyp2f1_euler_oracle(Cplx<R> a, Cplx<R> b, Cplx<R> c, R x, double tol = 1e-11) {
    if (!(to_double(c.re) > to_double(b.re) && to_double(b.re) > 0.0))
        throw DomainError("hyp2f1_euler_oracle: requires Re c > Re b > 0");
    if (to_double(x) >= 1.0) throw DomainError("hyp2f1_euler_oracle: requires x < 1");
    Cplx<R> bm1 = b - Cplx<R>(1.0, 0.0);
    Cplx<R> cbm1 = c - b - Cplx<R>(1.0, 0.0);
    auto integrand = [&](R t, R omt) -> Cplx<R> {
        Cplx<R> v = rpow(t, bm1) * rpow(omt, cbm1);
        R oxt = R(1.0) - x * t;
        return v * rpow(oxt, -a);
    };
    Cplx<R> I = tanh_sinh_01<R>(integrand, tol);
    return I / beta(b, c - b);
}

// Residual of the lattice identity
//   sum_{m in Z} (z+m)^{-k} = (-2 pi i)^k / Gamma(k) * sum_{m>=1} m^{k-1} e(m z),
// both sides truncated below the working precision.  Property-test helper.
template <class R>
double lattice_sum_check(Cplx<R> z, int k) {
    if (k < 4 || (k % 2) != 0)
        throw DomainError("lattice_sum_check: k must be even and >= 4");
    if (to_double(z.im) <= 0.0)
        throw DomainError("lattice_sum_check: requires Im z > 0");

    // left side: |z+m|^{-k} tail ~ 2 M^{-(k-1)}/(k-1)
    double need = 1e-14;
    long M = long(std::ceil(std::fabs(to_double(z.re)) +
                            std::pow(4.0 / ((k - 1) * need), 1.0 / (k - 1))));
    M = std::max<long>(M, 64);
    M = std::min<long>(M, 40000);
    CplxSum<R> lhs;
    for (long m = -M; m <= M; ++m) {
        Cplx<R> zm = z + Cplx<R>(double(m), 0.0);
        lhs.add(pow(zm, Cplx<R>(double(-k), 0.0)));
    }

    // right side: m^{k-1} e^{2 pi i m z} decays like e^{-2 pi m Im z}
    const R two_pi = real_const<R>::two_pi();
    CplxSum<R> rhs;
    for (long m = 1; m <= 200000; ++m) {
        Cplx<R> iz(-two_pi * R(double(m)) * z.im, two_pi * R(double(m)) * z.re);
        Cplx<R> term = rpow(R(double(m)), Cplx<R>(double(k - 1), 0.0)) * exp(iz);
        rhs.add(term);
        if (to_double(abs(term)) < 1e-20 * (to_double(abs(rhs.value())) + 1e-30) && m > 8)
            break;
    }
    // (-2 pi i)^k = (2 pi)^k * (-i)^k, and (-i)^k = (-1)^{k/2} for even k
    R sign((k / 2) % 2 == 0 ? 1.0 : -1.0);
    Cplx<R> factor = Cplx<R>(sign * pow_int(two_pi, k) / gamma_int<R>(k), R(0.0));
    return to_double(abs(lhs.value() - factor * rhs.value()));
}

} // namespace rtf

#endif
