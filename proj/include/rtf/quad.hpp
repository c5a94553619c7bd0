#ifndef RTF_QUAD_HPP
#define RTF_QUAD_HPP

// Quadrature back-ends shared by the oracles and the Petersson-norm
// integrator: Gauss-Legendre nodes via Newton on the Legendre recurrence
// (computed in the working precision and cached per order), plus
// tanh-sinh for integrands with algebraic endpoint singularities.

#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <vector>

#include "rtf/cplx.hpp"
#include "rtf/errors.hpp"
#include "rtf/sum.hpp"

namespace rtf {

template <class R>
struct GaussLegendre {
    std::vector<R> x, w; // nodes/weights on [-1, 1]
};

template <class R>
const GaussLegendre<R>& gl_rule(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussLegendre<R>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto rule = std::make_unique<GaussLegendre<R>>();
    rule->x.resize(n);
    rule->w.resize(n);
    const int m = (n + 1) / 2;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < m; ++i) {
        R z(std::cos(pi * (i + 0.75) / (n + 0.5)));
        R pp(1.0);
        for (int iter = 0; iter < 100; ++iter) {
            R p0(1.0), p1(0.0);
            for (int j = 0; j < n; ++j) {
                R p2 = p1;
                p1 = p0;
                p0 = ((R(double(2 * j + 1)) * z * p1) - R(double(j)) * p2) / R(double(j + 1));
            }
            pp = R(double(n)) * (z * p0 - p1) / (z * z - R(1.0));
            R dz = p0 / pp;
            z = z - dz;
            if (to_double(fabs(dz)) < to_double(real_const<R>::eps()) * 16.0) break;
        }
        rule->x[i] = -z;
        rule->x[n - 1 - i] = z;
        R w = R(2.0) / ((R(1.0) - z * z) * pp * pp);
        rule->w[i] = w;
        rule->w[n - 1 - i] = w;
    }
    const auto& ref = *rule;
    cache.emplace(n, std::move(rule));
    return ref;
}

// integral of f over [a, b] with an n-point rule; f returns R or Cplx<R>
template <class R, class F>
auto gl_integrate(F&& f, R a, R b, int n) {
    const auto& rule = gl_rule<R>(n);
    R c = (b + a) / R(2.0), h = (b - a) / R(2.0);
    using Ret = std::decay_t<decltype(f(a))>;
    if constexpr (std::is_same_v<Ret, Cplx<R>>) {
        CplxSum<R> sum;
        for (int i = 0; i < n; ++i) sum.add(f(c + h * rule.x[i]) * rule.w[i]);
        return sum.value() * h;
    } else {
        CompSum<R> sum;
        for (int i = 0; i < n; ++i) sum.add(f(c + h * rule.x[i]) * rule.w[i]);
        return sum.value() * h;
    }
}

// order-doubling on a fixed interval until two answers agree
template <class R, class F>
auto gl_adaptive(F&& f, R a, R b, double tol, int max_order = 4096) {
    auto prev = gl_integrate(f, a, b, 16);
    for (int n = 32; n <= max_order; n *= 2) {
        auto cur = gl_integrate(f, a, b, n);
        double diff, scale;
        if constexpr (std::is_same_v<decltype(cur), Cplx<R>>) {
            diff = to_double(abs(cur - prev));
            scale = std::max(1.0, to_double(abs(cur)));
        } else {
            diff = std::fabs(to_double(cur - prev));
            scale = std::max(1.0, std::fabs(to_double(cur)));
        }
        if (diff <= tol * scale) return cur;
        prev = cur;
    }
    throw ConvergenceError("gl_adaptive: no convergence at max order");
}

// tanh-sinh on (0, 1).  f(t, 1-t) gets both coordinates computed without
// cancellation so algebraic singularities at either endpoint stay accurate.
template <class R, class F>
auto tanh_sinh_01(F&& f, double tol, int max_level = 11) {
    using Ret = std::decay_t<decltype(f(R(0.5), R(0.5)))>;
    const R half_pi = real_const<R>::half_pi();
    const double umax = 6.0;

    auto eval_at = [&](double u) -> Ret {
        R s = half_pi * sinh(R(u));
        // t = e^{2s}/(1+e^{2s}), 1-t = 1/(1+e^{2s}); evaluate the small one first
        R t, omt;
        if (u >= 0.0) {
            R e = exp(R(-2.0) * s);
            omt = e / (R(1.0) + e);
            t = R(1.0) - omt;
        } else {
            R e = exp(R(2.0) * s);
            t = e / (R(1.0) + e);
            omt = R(1.0) - t;
        }
        R w = half_pi * cosh(R(u)) / (cosh(s) * cosh(s)) * R(0.5);
        if (to_double(t) <= 0.0 || to_double(omt) <= 0.0 || to_double(w) == 0.0)
            return Ret{};
        return f(t, omt) * w;
    };

    double h = 1.0;
    Ret total{};
    for (int level = 0; level <= max_level; ++level) {
        CplxSum<R> csum;
        CompSum<R> rsum;
        long jmax = long(umax / h);
        for (long j = -jmax; j <= jmax; ++j) {
            if (level > 0 && (j % 2 == 0)) continue;
            Ret v = eval_at(double(j) * h);
            if constexpr (std::is_same_v<Ret, Cplx<R>>) csum.add(v);
            else rsum.add(v);
        }
        Ret layer;
        if constexpr (std::is_same_v<Ret, Cplx<R>>) layer = csum.value();
        else layer = rsum.value();

        Ret cur = (level == 0) ? layer * R(h) : total * R(0.5) + layer * R(h);
        if (level >= 3) {
            double diff, scale;
            if constexpr (std::is_same_v<Ret, Cplx<R>>) {
                diff = to_double(abs(cur - total));
                scale = std::max(1.0, to_double(abs(cur)));
            } else {
                diff = std::fabs(to_double(cur - total));
                scale = std::max(1.0, std::fabs(to_double(cur)));
            }
            if (diff <= tol * scale) return cur;
        }
        total = cur;
        h *= 0.5;
    }
    throw ConvergenceError("tanh_sinh_01: no convergence at max level");
}

} // namespace rtf

#endif
