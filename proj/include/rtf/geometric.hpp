#ifndef RTF_GEOMETRIC_HPP
#define RTF_GEOMETRIC_HPP

// The geometric side of the moment identity.
//
//   m2_main      the four closed-form main-term summands,
//   j_sing       the same content as the raw singular-orbital sum, kept
//                as an independent bookkeeping route,
//   psi/phi/Phi  the three regular-orbit kernels,
//   e_total      the three error series with rigorous geometric tail
//                majorants,
//   m2_zero      the central main term as a contour mean,
//   phi0         the central middle kernel (digamma and parameter-
//                gradient form),
//   corollary_e  the central error series,
//   geometric_total  the assembled breakdown, generic or central path,
//   orbital_quadrature_oracle  raw 2-D quadrature of one regular-orbit
//                integral, used to pin every constant and sign in the
//                closed forms.

#include <array>

#include "rtf/modforms/arith.hpp"
#include "rtf/special/hyp2f1.hpp"
#include "rtf/special/zeta.hpp"
#include "rtf/special/incgamma.hpp"
#include "rtf/quad.hpp"

namespace rtf {

template <class R>
struct MomentBreakdown {
    std::array<Cplx<R>, 4> m2{};   // central path stores the contour value in slot 0
    Cplx<R> e1{}, e2{}, e3{};
    long e1_terms = 0, e3_terms = 0;
    double e1_tail = 0.0, e3_tail = 0.0; // reported tail majorants at truncation
    bool central_path = false;
    Cplx<R> total{};
};

namespace geo_detail {

inline double parity_sign(int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; } // i^k, k even

inline void check_weight_even(int k) {
    if (k < 4 || k % 2) throw DomainError("geometric: k must be an even weight >= 4");
}

inline double dist_to_integer(CplxD v) {
    double re = v.re;
    return std::hypot(re - std::round(re), v.im);
}

template <class R>
CplxD approx(Cplx<R> z) { return CplxD(to_double(z.re), to_double(z.im)); }

// Gamma(k/2 - s1) Gamma(k/2 - s2) / Gamma(k); arguments stay in Re > 1
template <class R>
Cplx<R> gamma_pair_ratio(int k, Cplx<R> s1, Cplx<R> s2) {
    Cplx<R> kh(double(k) / 2.0, 0.0);
    return exp(log_gamma(kh - s1) + log_gamma(kh - s2) -
               log_gamma(Cplx<R>(double(k), 0.0)));
}

} // namespace geo_detail

// C_k = pi i^k / (2^{k-3} (k-1)); real with sign (-1)^{k/2} for even k
template <class R>
R c_k_constant(int k) {
    geo_detail::check_weight_even(k);
    return R(geo_detail::parity_sign(k)) * real_const<R>::pi() /
           (pow_int(R(2.0), k - 3) * R(double(k - 1)));
}

// ---------------------------------------------------------------------------
// main term

// the four summands; the fourth uses Gamma(s2+k/2) in the denominator,
// the reading consistent with the singular-orbital route (j_sing below)
// and confirmed by the identity tests
template <class R>
std::array<Cplx<R>, 4> m2_main(int k, long n, Cplx<R> s1, Cplx<R> s2) {
    geo_detail::check_weight_even(k);
    // zeta poles sit on s1 + s2 = 0 and s1 - s2 = 0 (nonzero integer
    // differences are harmless here; only the middle kernel cares)
    CplxD sum = geo_detail::approx(s1 + s2);
    if (std::hypot(sum.re, sum.im) < 1e-9)
        throw PoleError("m2_main: zeta pole at s1 + s2 = 0");
    CplxD diff = geo_detail::approx(s1 - s2);
    if (std::hypot(diff.re, diff.im) < 1e-9)
        throw PoleError("m2_main: zeta pole at s1 - s2 = 0");

    const R two_pi = real_const<R>::two_pi();
    const R sign = R(geo_detail::parity_sign(k));
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const R nn = from_long<R>(n);
    Cplx<R> half(0.5, 0.0);

    Cplx<R> sig_minus = sigma_v(s1 - s2, n);
    Cplx<R> sig_plus = sigma_v(s1 + s2, n);

    std::array<Cplx<R>, 4> t;
    t[0] = sig_minus * rpow(nn, -(s1 + half)) * zeta(Cplx<R>(1.0, 0.0) + s1 + s2);

    Cplx<R> gratio2 = exp(log_gamma(kh - s1) + log_gamma(kh - s2) -
                          log_gamma(kh + s1) - log_gamma(kh + s2));
    t[1] = sig_minus * rpow(nn, s2 - half) * zeta(Cplx<R>(1.0, 0.0) - s1 - s2) *
           gratio2 * rpow(two_pi, R(2.0) * (s1 + s2));

    Cplx<R> gratio3 = exp(log_gamma(kh - s1) - log_gamma(kh + s1));
    t[2] = sign * sig_plus * rpow(nn, -(s2 + half)) *
           zeta(Cplx<R>(1.0, 0.0) - s1 + s2) * gratio3 * rpow(two_pi, R(2.0) * s1);

    Cplx<R> gratio4 = exp(log_gamma(kh - s2) - log_gamma(kh + s2));
    t[3] = sign * sig_plus * rpow(nn, -(s1 + half)) *
           zeta(Cplx<R>(1.0, 0.0) + s1 - s2) * gratio4 * rpow(two_pi, R(2.0) * s2);
    return t;
}

// the kernel-normalization prefactor relating the raw orbital integrals
// to the moment: P = 2^{k-1} pi (2pi)^{-s1-s2} n^{(k-1)/2}
//                    Gamma(s1+k/2) Gamma(s2+k/2) / Gamma(k)
template <class R>
Cplx<R> spectral_prefactor(int k, long n, Cplx<R> s1, Cplx<R> s2) {
    const R two_pi = real_const<R>::two_pi();
    const R pi = real_const<R>::pi();
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const R nn = from_long<R>(n);
    R npow = pow_int(nn, (k - 2) / 2) * sqrt(nn);
    return pow_int(R(2.0), k - 1) * pi * rpow(two_pi, -(s1 + s2)) *
           Cplx<R>(npow, R(0.0)) * exp(log_gamma(kh + s1) + log_gamma(kh + s2) -
                                       log_gamma(Cplx<R>(double(k), 0.0)));
}

// singular orbital integrals, printed form:
// small cell (identity and omega twist) plus dual cell (both twists)
template <class R>
Cplx<R> j_sing(int k, long n, Cplx<R> s1, Cplx<R> s2) {
    geo_detail::check_weight_even(k);
    const R two_pi = real_const<R>::two_pi();
    const R sign = R(geo_detail::parity_sign(k)); // i^k
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const Cplx<R> kk(double(k), 0.0);
    const R nn = from_long<R>(n);
    const R ck_inv = R(1.0) / c_k_constant<R>(k); // C_k^{-1}, real for even k
    const R n_km1 = pow_int(nn, k - 1);

    Cplx<R> sig_minus = sigma_v(s1 - s2, n);
    Cplx<R> sig_plus = sigma_v(s1 + s2, n);
    Cplx<R> one(1.0, 0.0);

    // 2 C_k^{-1} i^k Gamma(s1+k/2)Gamma(s2+k/2) / ((2pi)^{s1+s2} Gamma(k))
    //   * zeta(1+s1+s2) sigma_{s1-s2}(n) n^{k-1} / n^{s1+k/2}
    Cplx<R> a1 = R(2.0) * ck_inv * sign *
                 exp(log_gamma(kh + s1) + log_gamma(kh + s2) - log_gamma(kk)) *
                 rpow(two_pi, -(s1 + s2)) * zeta(one + s1 + s2) * sig_minus *
                 (n_km1 * rpow(nn, -(s1 + kh.re)));

    Cplx<R> a2 = R(2.0) * ck_inv * sign * rpow(two_pi, s1 + s2) *
                 exp(log_gamma(kh - s1) + log_gamma(kh - s2) - log_gamma(kk)) *
                 zeta(one - s1 - s2) * sig_minus * (n_km1 * rpow(nn, s2 - kh.re));

    Cplx<R> a3 = R(2.0) * ck_inv * rpow(two_pi, s1 - s2) *
                 exp(log_gamma(kh - s1) + log_gamma(kh + s2) - log_gamma(kk)) *
                 zeta(one - s1 + s2) * sig_plus * (n_km1 * rpow(nn, -(s2 + kh.re)));

    Cplx<R> a4 = R(2.0) * ck_inv * rpow(two_pi, s2 - s1) *
                 exp(log_gamma(kh + s1) + log_gamma(kh - s2) - log_gamma(kk)) *
                 zeta(one + s1 - s2) * sig_plus * (n_km1 * rpow(nn, -(s1 + kh.re)));

    return a1 + a2 + a3 + a4;
}

// ---------------------------------------------------------------------------
// regular-orbit kernels

template <class R>
Cplx<R> psi_term(int k, long n, long m, Cplx<R> s1, Cplx<R> s2) {
    if (m < 1) throw DomainError("psi_term: m >= 1 required");
    const R two_pi = real_const<R>::two_pi();
    const R half_pi = real_const<R>::half_pi();
    const R nn = from_long<R>(n), mm = from_long<R>(m);
    Cplx<R> F = hyp2f1(Cplx<R>(double(k) / 2.0, 0.0) - s2,
                       Cplx<R>(double(k) / 2.0, 0.0) - s1,
                       Cplx<R>(double(k), 0.0), -nn / mm)
                    .value;
    return R(2.0) * rpow(two_pi, s1 + s2) * cos(Cplx<R>(half_pi, R(0.0)) * (s1 - s2)) *
           rpow(mm, s2) * rpow(nn + mm, -(s1 + s2)) *
           Cplx<R>(pow_int(nn / mm, k / 2), R(0.0)) *
           geo_detail::gamma_pair_ratio(k, s1, s2) * F;
}

template <class R>
Cplx<R> Phi_term(int k, long n, long m, Cplx<R> s1, Cplx<R> s2) {
    if (m < n + 1) throw DomainError("Phi_term: m >= n + 1 required");
    const R two_pi = real_const<R>::two_pi();
    const R half_pi = real_const<R>::half_pi();
    const R nn = from_long<R>(n), mm = from_long<R>(m);
    Cplx<R> F = hyp2f1(Cplx<R>(double(k) / 2.0, 0.0) - s2,
                       Cplx<R>(double(k) / 2.0, 0.0) - s1,
                       Cplx<R>(double(k), 0.0), nn / mm)
                    .value;
    return R(2.0) * rpow(two_pi, s1 + s2) * cos(Cplx<R>(half_pi, R(0.0)) * (s1 + s2)) *
           rpow(mm, s2) * rpow(mm - nn, -(s1 + s2)) *
           Cplx<R>(pow_int(nn / mm, k / 2), R(0.0)) *
           geo_detail::gamma_pair_ratio(k, s1, s2) * F;
}

template <class R>
Cplx<R> phi_term(int k, long n, long m, Cplx<R> s1, Cplx<R> s2) {
    if (m < 1 || m > n - 1) throw DomainError("phi_term: 1 <= m <= n-1 required");
    if (geo_detail::dist_to_integer(geo_detail::approx(s1 - s2)) < 1e-9)
        throw PoleError("phi_term: sine zero at integer s1 - s2");
    const R two_pi = real_const<R>::two_pi();
    const R half_pi = real_const<R>::half_pi();
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const Cplx<R> one(1.0, 0.0);
    const R nn = from_long<R>(n), mm = from_long<R>(m);
    R x = mm / nn;

    Cplx<R> pref = rpow(two_pi, s1 + s2 + one) * rpow(nn - mm, -(s1 + s2));

    Cplx<R> Fa = hyp2f1(kh - s2, one - kh - s2, s1 - s2 + one, x).value;
    Cplx<R> t1 = pref / (R(2.0) * sin(Cplx<R>(half_pi, R(0.0)) * (s2 - s1))) *
                 rpow(nn, s2) * exp(log_gamma(kh - s2) - log_gamma(kh + s2)) /
                 gamma(one + s1 - s2) * Fa;

    Cplx<R> Fb = hyp2f1(kh - s1, one - kh - s1, s2 - s1 + one, x).value;
    Cplx<R> t2 = pref / (R(2.0) * sin(Cplx<R>(half_pi, R(0.0)) * (s1 - s2))) *
                 rpow(nn, s1) * rpow(mm, s2 - s1) *
                 exp(log_gamma(kh - s1) - log_gamma(kh + s1)) / gamma(one - s1 + s2) *
                 Fb;
    return t1 + t2;
}

// ---------------------------------------------------------------------------
// error series

template <class R>
struct ESeriesResult {
    Cplx<R> e1{}, e2{}, e3{};
    long e1_terms = 0, e3_terms = 0;
    double e1_tail = 0.0, e3_tail = 0.0;
};

namespace geo_detail {

// sum a kernel series over m = m0, m0+1, ... with the geometric tail
// majorant ratio (m/(m+1))^D; stops once 2 * max(last 3 |terms|) * rho/(1-rho)
// drops below tol
template <class R, class Term>
std::pair<Cplx<R>, std::pair<long, double>> summed_tail(Term&& term_fn, long m0, long n,
                                                        double D, double tol, long cap) {
    if (D <= 1.0)
        throw DomainError("e_total: decay exponent too small; s outside the usable region");
    CplxSum<R> acc;
    double last3[3] = {0.0, 0.0, 0.0};
    long count = 0;
    const long m_min_tailcheck = std::max<long>(2 * n, 16);
    for (long m = m0; m < m0 + cap; ++m) {
        Cplx<R> t = term_fn(m);
        acc.add(t);
        ++count;
        last3[count % 3] = to_double(abs(t));
        if (m >= m_min_tailcheck && count >= 3) {
            double rho = std::pow(double(m) / double(m + 1), D);
            double base = std::max(last3[0], std::max(last3[1], last3[2]));
            double bound = 2.0 * base * rho / (1.0 - rho);
            if (bound < tol)
                return {acc.value(), {count, bound}};
        }
    }
    throw ConvergenceError("e_total: series cap reached before tail bound met");
}

} // namespace geo_detail

template <class R>
ESeriesResult<R> e_total(int k, long n, Cplx<R> s1, Cplx<R> s2, double tol = 1e-12,
                         long cap = 100000) {
    geo_detail::check_weight_even(k);
    const R sign = R(geo_detail::parity_sign(k));
    const R nn = from_long<R>(n);
    const R inv_sqrt_n = R(1.0) / sqrt(nn);
    double abs_re = std::fabs(geo_detail::approx(s1).re) + std::fabs(geo_detail::approx(s2).re);
    double D = k / 2.0 - abs_re - 0.2;

    ESeriesResult<R> out;

    // Parity bookkeeping, pinned against raw orbit quadrature (and the
    // spectral side): the (-1)^{k/2} factor multiplies the first and the
    // middle series; the third series enters with +1.
    auto psi_series_term = [&](long m) {
        return sigma_v(s1 - s2, m) * sigma_v(s1 + s2, n + m) * psi_term(k, n, m, s1, s2);
    };
    auto r1 = geo_detail::summed_tail<R>(psi_series_term, 1, n, D, tol, cap);
    out.e1 = Cplx<R>(sign, R(0.0)) * inv_sqrt_n * r1.first;
    out.e1_terms = r1.second.first;
    out.e1_tail = r1.second.second * to_double(inv_sqrt_n);

    CplxSum<R> mid;
    for (long m = 1; m <= n - 1; ++m)
        mid.add(sigma_v(s1 + s2, n - m) * sigma_v(s1 - s2, m) * phi_term(k, n, m, s1, s2));
    out.e2 = Cplx<R>(sign, R(0.0)) * inv_sqrt_n * mid.value();

    auto Phi_series_term = [&](long m) {
        return sigma_v(s1 - s2, m) * sigma_v(s1 + s2, m - n) * Phi_term(k, n, m, s1, s2);
    };
    auto r3 = geo_detail::summed_tail<R>(Phi_series_term, n + 1, n, D, tol, cap);
    out.e3 = inv_sqrt_n * r3.first;
    out.e3_terms = r3.second.first;
    out.e3_tail = r3.second.second * to_double(inv_sqrt_n);
    return out;
}

// ---------------------------------------------------------------------------
// central specialization

// M2(n;0,0) as the mean of the contour integrand over |s| = eps; the
// trapezoid rule is spectrally accurate here, and K vs 2K must agree
template <class R>
R m2_zero(int k, long n, double eps = 0.1, int K = 64) {
    geo_detail::check_weight_even(k);
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("m2_zero: eps in (0, 0.5) required");
    if (K < 16) throw DomainError("m2_zero: K >= 16 required");
    const R nn = from_long<R>(n);
    const R two_pi = real_const<R>::two_pi();
    const Cplx<R> khalf(double(k) / 2.0, 0.0);
    const R sig0 = R(double(sigma0(n)));
    const R front = R(4.0) * sig0 / sqrt(nn);

    auto g = [&](R theta) -> Cplx<R> {
        R c, s;
        sincos(theta, s, c);
        Cplx<R> z(R(eps) * c, R(eps) * s);
        Cplx<R> val = exp(R(2.0) * (log_gamma((z + Cplx<R>(double(k), 0.0)) / R(2.0)) -
                                    log_gamma(khalf)));
        val = val * rpow(two_pi, -z) * rpow(nn, -z / R(2.0)) *
              zeta(Cplx<R>(1.0, 0.0) + z);
        return val;
    };
    auto mean_at = [&](int KK) {
        CplxSum<R> s;
        for (int j = 0; j < KK; ++j)
            s.add(g(two_pi * R(double(j)) / R(double(KK))));
        return s.value() / R(double(KK));
    };
    Cplx<R> m1 = mean_at(K), m2v = mean_at(2 * K);
    if (to_double(abs(m2v - m1)) > 1e-10 * std::max(1.0, to_double(abs(m2v))))
        throw ConvergenceError("m2_zero: contour mean did not converge under K-doubling");
    if (std::fabs(to_double(m2v.im)) > 1e-9 * std::max(1.0, to_double(abs(m2v))))
        throw ConvergenceError("m2_zero: contour mean has a non-vanishing imaginary part");
    return front * m2v.re;
}

// residue closed form of the same contour integral, used as a test oracle:
// M2(n;0,0) = 4 sigma_0(n)/sqrt(n) * (gamma_E + psi(k/2) - log(2 pi sqrt n))
template <class R>
R m2_zero_residue_oracle(int k, long n) {
    const R nn = from_long<R>(n);
    const double euler_gamma = 0.57721566490153286061;
    R psi_kh = digamma(Cplx<R>(double(k) / 2.0, 0.0)).re;
    return R(4.0) * R(double(sigma0(n))) / sqrt(nn) *
           (R(euler_gamma) + psi_kh - log(real_const<R>::two_pi() * sqrt(nn)));
}

// phi_k(x) at the center: (-log x - 2 psi(k/2) + 2 psi(1)) F(k/2, 1-k/2; 1; x)
//   - (d/da + d/db + 2 d/dc) F at (k/2, 1-k/2; 1; x)
template <class R>
R phi0(int k, R x) {
    geo_detail::check_weight_even(k);
    double xd = to_double(x);
    if (!(xd > 0.0 && xd <= 0.95)) throw DomainError("phi0: x in (0, 0.95] required");
    Cplx<R> a(double(k) / 2.0, 0.0), b(1.0 - double(k) / 2.0, 0.0), c(1.0, 0.0);
    auto g = hyp2f1_param_grad(a, b, c, x);
    R psi_kh = digamma(Cplx<R>(double(k) / 2.0, 0.0)).re;
    R psi_1 = digamma(Cplx<R>(1.0, 0.0)).re;
    Cplx<R> out = Cplx<R>(-log(x) - R(2.0) * psi_kh + R(2.0) * psi_1, R(0.0)) * g.f -
                  (g.da + g.db + R(2.0) * g.dc);
    return out.re;
}

template <class R>
ESeriesResult<R> corollary_e(int k, long n, double tol = 1e-12, long cap = 100000) {
    geo_detail::check_weight_even(k);
    const R sign = R(geo_detail::parity_sign(k));
    const R nn = from_long<R>(n);
    const R inv_sqrt_n = R(1.0) / sqrt(nn);
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const Cplx<R> kk(double(k), 0.0);
    Cplx<R> gam = exp(R(2.0) * log_gamma(kh) - log_gamma(kk));
    double D = k / 2.0 - 0.2;

    ESeriesResult<R> out;
    auto t1 = [&](long m) -> Cplx<R> {
        R mm = from_long<R>(m);
        Cplx<R> F = hyp2f1(kh, kh, kk, -nn / mm).value;
        return R(double(sigma0(m) * sigma0(n + m))) * pow_int(nn / mm, k / 2) * gam * F;
    };
    auto r1 = geo_detail::summed_tail<R>(t1, 1, n, D, tol, cap);
    out.e1 = R(2.0) * sign * inv_sqrt_n * r1.first;
    out.e1_terms = r1.second.first;
    out.e1_tail = r1.second.second * 2.0 * to_double(inv_sqrt_n);

    // same parity placement as the generic path: sign on the middle
    // series, none on the third
    CompSum<R> mid;
    for (long m = 1; m <= n - 1; ++m)
        mid.add(R(double(sigma0(n - m) * sigma0(m))) * phi0(k, from_long<R>(m) / nn));
    out.e2 = Cplx<R>(R(2.0) * sign * inv_sqrt_n * mid.value(), R(0.0));

    auto t3 = [&](long m) -> Cplx<R> {
        R mm = from_long<R>(m);
        Cplx<R> F = hyp2f1(kh, kh, kk, nn / mm).value;
        return R(double(sigma0(m) * sigma0(m - n))) * pow_int(nn / mm, k / 2) * gam * F;
    };
    auto r3 = geo_detail::summed_tail<R>(t3, n + 1, n, D, tol, cap);
    out.e3 = R(2.0) * inv_sqrt_n * r3.first;
    out.e3_terms = r3.second.first;
    out.e3_tail = r3.second.second * 2.0 * to_double(inv_sqrt_n);
    return out;
}

// ---------------------------------------------------------------------------
// assembly

template <class R>
MomentBreakdown<R> geometric_total(int k, long n, Cplx<R> s1, Cplx<R> s2,
                                   double tol = 1e-12, long cap = 100000) {
    MomentBreakdown<R> br;
    bool central = to_double(abs(s1)) < 1e-12 && to_double(abs(s2)) < 1e-12;
    br.central_path = central;
    if (central) {
        // The contour main term is the s -> 0 limit of the first summand
        // pair; the second pair contributes the same value times
        // (-1)^{k/2}, so the center carries the full contour value for
        // k = 0 mod 4 and nothing for k = 2 mod 4 (where the spectral
        // side is sign-forced to vanish).
        if ((k / 2) % 2 == 0)
            br.m2[0] = Cplx<R>(m2_zero<R>(k, n), R(0.0));
        auto e = corollary_e<R>(k, n, tol, cap);
        br.e1 = e.e1;
        br.e2 = e.e2;
        br.e3 = e.e3;
        br.e1_terms = e.e1_terms;
        br.e3_terms = e.e3_terms;
        br.e1_tail = e.e1_tail;
        br.e3_tail = e.e3_tail;
    } else {
        br.m2 = m2_main(k, n, s1, s2);
        auto e = e_total(k, n, s1, s2, tol, cap);
        br.e1 = e.e1;
        br.e2 = e.e2;
        br.e3 = e.e3;
        br.e1_terms = e.e1_terms;
        br.e3_terms = e.e3_terms;
        br.e1_tail = e.e1_tail;
        br.e3_tail = e.e3_tail;
    }
    br.total = br.m2[0] + br.m2[1] + br.m2[2] + br.m2[3] + br.e1 + br.e2 + br.e3;
    return br;
}

// ---------------------------------------------------------------------------
// raw orbital quadrature and the per-orbit closed forms

struct MatrixOrbit {
    long a, b, c, d;
};

// integral of y1^{-s1+k/2} y2^{s2+k/2} / R(i y1, i y2)^k dy1 dy2/(y1 y2)
// with R(i y1, i y2) = -c y1 y2 + i a y1 + i d y2 + b, over (0,inf)^2,
// after mapping y = e^u
template <class R>
Cplx<R> orbital_quadrature_oracle(const MatrixOrbit& g, int k, Cplx<R> s1, Cplx<R> s2,
                                  double tol = 1e-9, int max_order = 1024) {
    geo_detail::check_weight_even(k);
    if (g.a == 0 || g.b == 0 || g.c == 0 || g.d == 0)
        throw DomainError("orbital_quadrature_oracle: regular orbits need all entries nonzero");
    if (std::fabs(geo_detail::approx(s1).re) > k / 2.0 - 1.0 ||
        std::fabs(geo_detail::approx(s2).re) > k / 2.0 - 1.0)
        throw DomainError("orbital_quadrature_oracle: Re s outside the convergence region");

    const R a = from_long<R>(g.a), b = from_long<R>(g.b), c = from_long<R>(g.c),
            d = from_long<R>(g.d);
    const Cplx<R> w1 = Cplx<R>(double(k) / 2.0, 0.0) - s1;
    const Cplx<R> w2 = Cplx<R>(double(k) / 2.0, 0.0) + s2;
    const double U = 16.0;

    auto inner = [&](R u1, int order) {
        R y1 = exp(u1);
        auto fy = [&](R u2) -> Cplx<R> {
            R y2 = exp(u2);
            Cplx<R> Rg(-c * y1 * y2 + b, a * y1 + d * y2);
            Cplx<R> lg = log(Rg);
            return exp(w1 * u1 + w2 * u2 - Cplx<R>(double(k), 0.0) * lg);
        };
        return gl_integrate(fy, R(-U), R(U), order);
    };

    Cplx<R> prev;
    bool have_prev = false;
    for (int order = 64; order <= max_order; order *= 2) {
        auto fx = [&](R u1) { return inner(u1, order); };
        Cplx<R> cur = gl_integrate(fx, R(-U), R(U), order);
        if (have_prev && to_double(abs(cur - prev)) <= tol * std::max(1.0, to_double(abs(cur))))
            return cur;
        prev = cur;
        have_prev = true;
    }
    throw ConvergenceError("orbital_quadrature_oracle: no convergence at max order");
}

// closed form of one first-cell orbit integral (ad = n+m, bc = m, labels >= 1):
//   W = i^{s1-s2+k} b^{s2} c^{s1} / (m^{k/2} d^{s1+s2})
//       B(s2+k/2, -s2+k/2) B(-s1+k/2, s1+k/2) F(-s2+k/2, -s1+k/2; k; -n/m)
template <class R>
Cplx<R> orbital_closed_form_psi(int k, long n, long m, const MatrixOrbit& g, Cplx<R> s1,
                                Cplx<R> s2) {
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const R half_pi = real_const<R>::half_pi();
    Cplx<R> iw = exp(Cplx<R>(R(0.0), half_pi) * (s1 - s2 + Cplx<R>(double(k), 0.0)));
    Cplx<R> F = hyp2f1(kh - s2, kh - s1, Cplx<R>(double(k), 0.0),
                       -from_long<R>(n) / from_long<R>(m))
                    .value;
    return iw * rpow(from_long<R>(g.b), s2) * rpow(from_long<R>(g.c), s1) /
           (Cplx<R>(pow_int(from_long<R>(m), k / 2), R(0.0)) *
            rpow(from_long<R>(g.d), s1 + s2)) *
           beta(s2 + kh, kh - s2) * beta(kh - s1, kh + s1) * F;
}

// closed form of one third-cell orbit integral (ad = m-n, bc = m, labels >= 1):
//   V = i^{s1+s2} b^{s2} c^{s1} / (m^{k/2} d^{s1+s2})
//       B(s2+k/2, -s2+k/2) B(-s1+k/2, s1+k/2) F(k/2-s2, k/2-s1; k; n/m)
template <class R>
Cplx<R> orbital_closed_form_Phi(int k, long n, long m, const MatrixOrbit& g, Cplx<R> s1,
                                Cplx<R> s2) {
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const R half_pi = real_const<R>::half_pi();
    Cplx<R> iw = exp(Cplx<R>(R(0.0), half_pi) * (s1 + s2));
    Cplx<R> F = hyp2f1(kh - s2, kh - s1, Cplx<R>(double(k), 0.0),
                       from_long<R>(n) / from_long<R>(m))
                    .value;
    return iw * rpow(from_long<R>(g.b), s2) * rpow(from_long<R>(g.c), s1) /
           (Cplx<R>(pow_int(from_long<R>(m), k / 2), R(0.0)) *
            rpow(from_long<R>(g.d), s1 + s2)) *
           beta(s2 + kh, kh - s2) * beta(kh - s1, kh + s1) * F;
}

// closed form of a second-cell pair U(s1,s2) + conj(U(conj s1, conj s2))
// (ad = n-m, bc = m, labels >= 1):
//   pi i^k a^{s1+s2} c^{s1-s2} / (n-m)^{s1+s2} * [
//     n^{s2-k/2} Gamma(k/2-s2)Gamma(k/2+s1)
//       / (sin(pi(s2-s1)/2) Gamma(1+s1-s2) Gamma(k)) F(k/2-s2,1-k/2-s2;s1-s2+1;m/n)
//   + n^{s1-k/2} m^{s2-s1} Gamma(k/2+s2)Gamma(k/2-s1)
//       / (sin(pi(s1-s2)/2) Gamma(1-s1+s2) Gamma(k)) F(k/2-s1,1-k/2-s1;s2-s1+1;m/n) ]
template <class R>
Cplx<R> orbital_closed_form_phi_pair(int k, long n, long m, const MatrixOrbit& g,
                                     Cplx<R> s1, Cplx<R> s2) {
    const Cplx<R> kh(double(k) / 2.0, 0.0);
    const Cplx<R> one(1.0, 0.0);
    const R half_pi = real_const<R>::half_pi();
    const R pi = real_const<R>::pi();
    const R nn = from_long<R>(n), mm = from_long<R>(m);
    const R sign = R(geo_detail::parity_sign(k)); // i^k
    R x = mm / nn;

    Cplx<R> common = Cplx<R>(pi * sign, R(0.0)) * rpow(from_long<R>(g.a), s1 + s2) *
                     rpow(from_long<R>(g.c), s1 - s2) * rpow(nn - mm, -(s1 + s2));

    Cplx<R> Fa = hyp2f1(kh - s2, one - kh - s2, s1 - s2 + one, x).value;
    Cplx<R> ta = rpow(nn, s2 - kh.re) *
                 exp(log_gamma(kh - s2) + log_gamma(kh + s1) -
                     log_gamma(Cplx<R>(double(k), 0.0))) /
                 (sin(Cplx<R>(half_pi, R(0.0)) * (s2 - s1)) * gamma(one + s1 - s2)) * Fa;

    Cplx<R> Fb = hyp2f1(kh - s1, one - kh - s1, s2 - s1 + one, x).value;
    Cplx<R> tb = rpow(nn, s1 - kh.re) * rpow(mm, s2 - s1) *
                 exp(log_gamma(kh + s2) + log_gamma(kh - s1) -
                     log_gamma(Cplx<R>(double(k), 0.0))) /
                 (sin(Cplx<R>(half_pi, R(0.0)) * (s1 - s2)) * gamma(one - s1 + s2)) * Fb;

    return common * (ta + tb);
}

} // namespace rtf

#endif
