#ifndef RTF_SPECIAL_ZETA_HPP
#define RTF_SPECIAL_ZETA_HPP

// Riemann zeta on C \ {1}: Borwein's alternating (eta) series with
// Chebyshev weights for Re s >= 1/2, functional equation below.
// The Borwein error after N terms is ~ (3+sqrt 8)^{-N} e^{pi |t| / 2},
// so N is chosen from |Im s| and the working precision.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "rtf/special/gamma.hpp"
#include "rtf/sum.hpp"

namespace rtf {

namespace detail {

template <class R>
const std::vector<R>& borwein_weights(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<R>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    // d_j = n * sum_{i=0}^{j} (n+i-1)! 4^i / ((n-i)! (2i)!)
    auto v = std::make_unique<std::vector<R>>(n + 1);
    R t = R(double(n)) * (R(1.0) / R(double(n))); // t_0 = (n-1)!/(n! 0!) * 4^0 * n = 1
    R acc = t;
    (*v)[0] = acc;
    for (int i = 1; i <= n; ++i) {
        // t_i / t_{i-1} = 4 (n+i-1)(n-i+1) / ((2i-1)(2i))
        t = t * R(4.0) * R(double(n + i - 1)) * R(double(n - i + 1)) /
            (R(double(2 * i - 1)) * R(double(2 * i)));
        acc = acc + t;
        (*v)[i] = acc;
    }
    const auto& ref = *v;
    cache.emplace(n, std::move(v));
    return ref;
}

template <class R>
Cplx<R> zeta_borwein(Cplx<R> s) {
    double t_im = std::fabs(to_double(s.im));
    double need = real_const<R>::digits10() * 2.302585 + 1.5707963 * t_im + 6.0;
    int n = std::max(24, int(need / 1.7627471740390861) + 2); // ln(3+sqrt8)
    const auto& d = borwein_weights<R>(n);

    CplxSum<R> sum;
    R sign(1.0);
    for (int j = 0; j < n; ++j) {
        // (-1)^j (d_j - d_n) (j+1)^{-s}
        Cplx<R> term = rpow(R(double(j + 1)), -s) * (sign * (d[j] - d[n]));
        sum.add(term);
        sign = -sign;
    }
    Cplx<R> denom = Cplx<R>(-d[n], R(0.0)) *
                    (Cplx<R>(1.0, 0.0) - rpow(R(2.0), Cplx<R>(1.0, 0.0) - s));
    return sum.value() / denom;
}

} // namespace detail

template <class R>
Cplx<R> zeta(Cplx<R> s) {
    if (to_double(s.im) == 0.0 && to_double(s.re) == 1.0)
        throw PoleError("zeta: pole at s = 1");
    if (to_double(s.im) == 0.0 && to_double(s.re) == 0.0)
        return Cplx<R>(-0.5, 0.0); // the reflection factor degenerates to 0 * pole here
    if (to_double(s.re) >= 0.5)
        return detail::zeta_borwein(s);
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const R pi = real_const<R>::pi();
    Cplx<R> one_minus = Cplx<R>(1.0, 0.0) - s;
    Cplx<R> factor = rpow(R(2.0), s) * rpow(pi, s - Cplx<R>(1.0, 0.0)) *
                     sin(Cplx<R>(pi / R(2.0), R(0.0)) * s) * gamma(one_minus);
    return factor * detail::zeta_borwein(one_minus);
}

} // namespace rtf

#endif
