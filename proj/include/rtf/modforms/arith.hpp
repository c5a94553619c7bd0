#ifndef RTF_MODFORMS_ARITH_HPP
#define RTF_MODFORMS_ARITH_HPP

// Divisor-sum functions for complex order: sigma_v(n) = sum_{d|n} d^v and
// the symmetric normalization tau_v(n) = sigma_{2v}(n)/n^v.  Trial
// division is plenty at the index sizes the series ever reach.

#include <vector>

#include "rtf/cplx.hpp"
#include "rtf/errors.hpp"

namespace rtf {

struct PrimePower {
    long p;
    int e;
};

inline std::vector<PrimePower> factorize(long n) {
    if (n < 1) throw DomainError("factorize: n >= 1 required");
    std::vector<PrimePower> f;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline std::vector<long> divisors(long n) {
    auto f = factorize(n);
    std::vector<long> d{1};
    for (const auto& pp : f) {
        size_t old = d.size();
        long q = 1;
        for (int e = 1; e <= pp.e; ++e) {
            q *= pp.p;
            for (size_t i = 0; i < old; ++i) d.push_back(d[i] * q);
        }
    }
    return d;
}

inline long sigma0(long n) {
    long c = 1;
    for (const auto& pp : factorize(n)) c *= pp.e + 1;
    return c;
}

// sigma_v(n) = prod_p (1 + p^v + ... + p^{ev})
template <class R>
Cplx<R> sigma_v(Cplx<R> v, long n) {
    Cplx<R> out(1.0, 0.0);
    for (const auto& pp : factorize(n)) {
        Cplx<R> w = rpow(R(double(pp.p)), v);
        Cplx<R> s(1.0, 0.0);
        for (int e = 0; e < pp.e; ++e) s = s * w + Cplx<R>(1.0, 0.0);
        out *= s;
    }
    return out;
}

template <class R>
Cplx<R> tau_v(Cplx<R> v, long n) {
    return sigma_v(Cplx<R>(2.0, 0.0) * v, n) / rpow(R(double(n)), v);
}

} // namespace rtf

#endif
