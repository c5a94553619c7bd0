#ifndef RTF_LFUNC_HPP
#define RTF_LFUNC_HPP

// Spectral-side analytics for one eigenform:
//   completed_L   Lambda(1/2+s) = (2pi)^{-(s+k/2)} Gamma(s+k/2) L(1/2+s, f)
//                 as an incomplete-gamma sum over the Fourier expansion,
//   L_value       the L-value itself,
//   petersson_norm  |f|^2 over the fundamental domain: the y >= 1 box
//                 collapses to an incomplete-gamma sum, the arc strip is
//                 integrated with nested Gauss-Legendre of doubling order,
//   sym2_L1       L(1, sym^2 f) through the norm relation
//                 1/|f|^2 = (4pi)^{k-1} 2 pi^2 / (Gamma(k) L(1, sym^2 f)).
//
// A slow Dirichlet-series route to L(1, sym^2 f) (smoothed, Richardson-
// extrapolated) is included as an independent cross-check oracle.

#include <map>
#include <memory>
#include <mutex>

#include "rtf/modforms/arith.hpp"
#include "rtf/modforms/qexp.hpp"
#include "rtf/quad.hpp"
#include "rtf/special/gamma.hpp"
#include "rtf/special/incgamma.hpp"
#include "rtf/special/zeta.hpp"

namespace rtf {

template <class R>
struct LValueResult {
    Cplx<R> s;          // L evaluated at 1/2 + s
    Cplx<R> value;
    double err_estimate = 0.0;
};

template <class R>
struct NormData {
    R petersson_sq{0.0};
    R sym2_at_1{0.0};
    std::string petersson_method = "fundamental-domain quadrature";
    std::string sym2_method = "norm relation";
};

namespace detail {

// i^k for even k is (-1)^{k/2}
inline double root_of_unity_sign(int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; }

template <class R>
std::vector<R> lambda_table(const Eigenform& f) {
    std::vector<R> lam(size_t(f.qexp.count));
    int k = f.weight;
    for (long n = 1; n <= f.qexp.count; ++n) {
        R norm = pow_int(R(double(n)), (k - 2) / 2) * sqrt(R(double(n)));
        lam[size_t(n - 1)] = f.qexp.coeff(n).template to_real<R>() / norm;
    }
    return lam;
}

} // namespace detail

template <class R>
R lambda(const Eigenform& f, long n) {
    if (n < 1 || n > f.qexp.count) throw RangeError("lambda: index beyond table");
    int k = f.weight;
    R norm = pow_int(R(double(n)), (k - 2) / 2) * sqrt(R(double(n)));
    return f.qexp.coeff(n).template to_real<R>() / norm;
}

// Lambda(1/2+s) = sum_n a(n) [ G(k/2+s, 2 pi n) + i^k G(k/2-s, 2 pi n) ],
// G(w, x) = Gamma(w, x) x^{-w}.  Terms die like e^{-2 pi n} n^{(k-1)/2}.
template <class R>
LValueResult<R> completed_L(const Eigenform& f, Cplx<R> s) {
    const int k = f.weight;
    if (std::fabs(to_double(s.re)) > k / 2.0 - 1.0)
        throw RangeError("completed_L: |Re s| <= k/2 - 1 required");
    if (f.qexp.count < 40)
        throw RangeError("completed_L: coefficient table too short");

    const R two_pi = real_const<R>::two_pi();
    const R sign = R(detail::root_of_unity_sign(k));
    const Cplx<R> khalf(double(k) / 2.0, 0.0);
    CplxSum<R> sum;
    double peak = 0.0, last = 0.0;
    long horizon = std::min<long>(f.qexp.count, 80);
    for (long n = 1; n <= horizon; ++n) {
        R x = two_pi * R(double(n));
        Cplx<R> wp = khalf + s, wm = khalf - s;
        Cplx<R> gp = upper_incomplete_gamma(wp, x) * rpow(x, -wp);
        Cplx<R> gm = upper_incomplete_gamma(wm, x) * rpow(x, -wm);
        R an = f.qexp.coeff(n).template to_real<R>();
        Cplx<R> term = Cplx<R>(an, R(0.0)) * (gp + Cplx<R>(sign, R(0.0)) * gm);
        sum.add(term);
        last = std::fabs(to_double(an)) *
               (to_double(abs(gp)) + to_double(abs(gm)));
        peak = std::max(peak, last);
        if (n >= 8 && last < 1e-24 * peak) break;
    }
    LValueResult<R> r;
    r.s = s;
    r.value = sum.value();
    r.err_estimate = last * 10.0;
    return r;
}

template <class R>
LValueResult<R> L_value(const Eigenform& f, Cplx<R> s) {
    LValueResult<R> lam = completed_L(f, s);
    const int k = f.weight;
    Cplx<R> w = s + Cplx<R>(double(k) / 2.0, 0.0);
    Cplx<R> factor = rpow(real_const<R>::two_pi(), w) / gamma(w);
    lam.value = lam.value * factor;
    lam.err_estimate *= to_double(abs(factor));
    return lam;
}

// |f|^2 = int_F |f(z)|^2 y^k dx dy / y^2 over the standard fundamental
// domain; box part in closed form, arc strip by nested quadrature of the
// truncated Fourier series.
template <class R>
R petersson_rect_part(const Eigenform& f) {
    const int k = f.weight;
    const R pi4 = R(2.0) * real_const<R>::two_pi();
    CompSum<R> rect;
    double peak = 0.0;
    for (long n = 1; n <= std::min<long>(f.qexp.count, 80); ++n) {
        R an = f.qexp.coeff(n).template to_real<R>();
        R x = pi4 * R(double(n));
        Cplx<R> g = upper_incomplete_gamma(Cplx<R>(double(k - 1), 0.0), x);
        R term = an * an * g.re / pow_int(x, k - 1);
        rect.add(term);
        double t = std::fabs(to_double(term));
        peak = std::max(peak, t);
        if (n >= 8 && t < 1e-24 * peak) break;
    }
    return rect.value();
}

// arc strip |x| <= 1/2, sqrt(1-x^2) <= y <= 1 at a fixed tensor order;
// e^{-2 pi n y} with y >= sqrt(3)/2 makes a short Fourier sum exact enough
template <class R>
R petersson_arc_at_order(const Eigenform& f, int order) {
    const int k = f.weight;
    const long M = std::min<long>(f.qexp.count, 48);
    const R two_pi = real_const<R>::two_pi();
    auto f_abs2 = [&](R x, R y) {
        Cplx<R> q = exp(Cplx<R>(-two_pi * y, two_pi * x));
        Cplx<R> acc(0.0, 0.0);
        for (long n = M; n >= 1; --n) {
            acc = acc * q;
            acc += Cplx<R>(f.qexp.coeff(n).template to_real<R>(), R(0.0));
        }
        acc = acc * q;
        R a = abs(acc);
        return a * a;
    };
    auto column = [&](R x) {
        R ylo = sqrt(R(1.0) - x * x);
        auto g = [&](R y) { return f_abs2(x, y) * pow_int(y, k - 2); };
        return gl_integrate(g, ylo, R(1.0), order);
    };
    return gl_integrate(column, R(-0.5), R(0.5), order);
}

template <class R>
R petersson_norm_at_order(const Eigenform& f, int order) {
    return petersson_rect_part<R>(f) + petersson_arc_at_order<R>(f, order);
}

template <class R>
R petersson_norm(const Eigenform& f, int quad_cap = 1024) {
    R rect = petersson_rect_part<R>(f);
    R prev(0.0);
    bool have_prev = false;
    for (int order = 16; order <= quad_cap; order *= 2) {
        R arc = petersson_arc_at_order<R>(f, order);
        if (have_prev) {
            double diff = std::fabs(to_double(arc - prev));
            double scale = std::max(std::fabs(to_double(arc)), 1e-300);
            if (diff <= 1e-10 * scale || diff <= 1e-18 * std::fabs(to_double(rect))) {
                return rect + arc;
            }
        }
        prev = arc;
        have_prev = true;
    }
    throw ConvergenceError("petersson_norm: arc quadrature did not settle");
}

// independent route to the completed value: adaptive quadrature of the
// defining integral, folded into [1, inf) by modularity:
//   Lambda(1/2+s) = int_1^inf f(iy) (y^{k/2+s} + i^k y^{k/2-s}) dy/y
template <class R>
Cplx<R> completed_L_quadrature_oracle(const Eigenform& f, Cplx<R> s, double tol = 1e-12) {
    const int k = f.weight;
    const R two_pi = real_const<R>::two_pi();
    const R sign = R(detail::root_of_unity_sign(k));
    const long M = std::min<long>(f.qexp.count, 64);
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    auto integrand = [&](R y) -> Cplx<R> {
        R q = exp(-two_pi * y);
        R acc(0.0);
        for (long n = M; n >= 1; --n) {
            acc = acc * q;
            acc = acc + f.qexp.coeff(n).template to_real<R>();
        }
        acc = acc * q;
        Cplx<R> ypow = rpow(y, kh + s) + Cplx<R>(sign, R(0.0)) * rpow(y, kh - s);
        return Cplx<R>(acc, R(0.0)) * ypow / Cplx<R>(y, R(0.0));
    };
    return gl_adaptive<R>(integrand, R(1.0), R(12.0), tol);
}

template <class R>
NormData<R> sym2_L1(const Eigenform& f, int quad_cap = 1024) {
    const int k = f.weight;
    NormData<R> nd;
    nd.petersson_sq = petersson_norm<R>(f, quad_cap);
    const R four_pi = R(2.0) * real_const<R>::two_pi();
    const R pi = real_const<R>::pi();
    nd.sym2_at_1 = nd.petersson_sq * pow_int(four_pi, k - 1) * R(2.0) * pi * pi /
                   gamma_int<R>(k);
    return nd;
}

// Independent slow route: L(1, sym^2 f) = zeta(2) sum_n lambda(n^2)/n.
// The tail is handled with an exponential cutoff e^{-n/X} at two values
// of X and one Richardson step (the bias is c1/X + O(1/X^2)).
// Needs a coefficient table covering primes up to the summation length.
template <class R>
R sym2_L1_series_oracle(const Eigenform& f, long cutoff) {
    const int k = f.weight;
    const long X = cutoff;
    const long length = 8 * X; // e^{-8} tail weight, negligible against 1e-4
    if (f.qexp.count < length)
        throw RangeError("sym2_L1_series_oracle: table shorter than series length");

    // lambda(p^{2e}) for all prime powers needed, by exact Hecke recursion
    std::map<std::pair<long, int>, R> lam_pp;
    auto lam_sq = [&](long n) -> R {
        R out(1.0);
        for (const auto& pp : factorize(n)) {
            auto key = std::make_pair(pp.p, 2 * pp.e);
            auto it = lam_pp.find(key);
            if (it == lam_pp.end()) {
                BigInt pk(1);
                for (int i = 0; i < k - 1; ++i) pk *= BigInt(pp.p);
                BigInt am1(1), a0 = f.qexp.coeff(pp.p); // a(p^0), a(p^1)
                std::vector<BigInt> apw{am1, a0};
                for (int e = 2; e <= 2 * pp.e; ++e)
                    apw.push_back(f.qexp.coeff(pp.p) * apw[size_t(e - 1)] -
                                  pk * apw[size_t(e - 2)]);
                R norm(1.0);
                for (int i = 0; i < pp.e; ++i) {
                    norm = norm * pow_int(R(double(pp.p)), k - 2) * R(double(pp.p));
                }
                it = lam_pp.emplace(key, apw[size_t(2 * pp.e)].template to_real<R>() / norm)
                         .first;
            }
            out = out * it->second;
        }
        return out;
    };

    auto smoothed = [&](long Xc) {
        CompSum<R> s;
        for (long n = 1; n <= length; ++n)
            s.add(lam_sq(n) / R(double(n)) * exp(R(-double(n) / double(Xc))));
        return s.value();
    };
    R d1 = smoothed(X / 2), d2 = smoothed(X);
    R d = R(2.0) * d2 - d1; // kills the c1/X bias
    const R pi = real_const<R>::pi();
    return pi * pi / R(6.0) * d;
}

// per-(weight, N, precision) cache: eigenform plus the norm data.  The
// quadrature cap applies when the entry is first built; later lookups with
// the same (k, N) reuse it.
template <class R>
struct SpectralData {
    const Eigenform* form = nullptr;
    NormData<R> norm;
};

template <class R>
const SpectralData<R>& spectral_data(int k, long N, const std::string& cache_dir = "",
                                     int quad_cap = 1024) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, std::unique_ptr<SpectralData<R>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, N);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto d = std::make_unique<SpectralData<R>>();
    d->form = &eigenform_cached(k, N, cache_dir);
    d->norm = sym2_L1<R>(*d->form, quad_cap);
    const auto& ref = *d;
    cache.emplace(key, std::move(d));
    return ref;
}

} // namespace rtf

#endif
