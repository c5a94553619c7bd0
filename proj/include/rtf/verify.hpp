#ifndef RTF_VERIFY_HPP
#define RTF_VERIFY_HPP

// Orchestration: the spectral side (the eigenvalue-weighted moment), the
// geometric side (main term plus error series), residuals, and batch
// scans.  Each grid point is a pure computation; scans preserve input
// order and record per-point failures without aborting the batch.

#include <array>
#include <chrono>
#include <string>
#include <vector>

#include "rtf/geometric.hpp"
#include "rtf/lfunc.hpp"

namespace rtf {

// Auto picks per weight: plain double below k = 18, double-double from
// there up (large Gamma ratios and near-vanishing central L-values make
// plain double lose too much to cancellation at those weights).
enum class Precision { Auto, Double, DoubleDouble };

inline Precision effective_precision(Precision p, int weight) {
    if (p != Precision::Auto) return p;
    return weight >= 18 ? Precision::DoubleDouble : Precision::Double;
}

inline const char* precision_name(Precision p) {
    switch (p) {
        case Precision::Double: return "double";
        case Precision::DoubleDouble: return "double-double";
        default: return "auto";
    }
}

struct SpectralParams {
    int weight = 12;
    long index = 1;
    CplxD s1{}, s2{};
};

struct ToleranceConfig {
    double identity_tol = 1e-8;
    double series_tol = 1e-12;
    Precision precision = Precision::Auto;
    long series_cap = 100000;
    int quadrature_cap = 1024;
    long table_length = 2000;
    std::string cache_dir; // optional QEXP cache directory

    void validate() const {
        if (!(series_tol < identity_tol))
            throw DomainError("ToleranceConfig: series_tol must be below identity_tol");
        if (identity_tol <= 0.0 || series_tol <= 0.0)
            throw DomainError("ToleranceConfig: tolerances must be positive");
        if (table_length < 64) throw DomainError("ToleranceConfig: table too short");
    }
};

struct VerificationReport {
    SpectralParams params;
    CplxD spectral{};
    std::array<CplxD, 4> m2{};
    CplxD e1{}, e2{}, e3{};
    CplxD geometric{};
    long e1_terms = 0, e3_terms = 0;
    bool central_path = false;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    bool pass = false;
    double spectral_ms = 0.0, geometric_ms = 0.0;
    std::string cache_id;
    std::string precision;
    std::string error; // empty on success
};

namespace verify_detail {

template <class R>
Cplx<R> spectral_total_impl(const SpectralParams& p, const ToleranceConfig& cfg) {
    const auto& sd =
        spectral_data<R>(p.weight, cfg.table_length, cfg.cache_dir, cfg.quadrature_cap);
    if (p.index < 1 || p.index > sd.form->qexp.count)
        throw RangeError("spectral_total: index outside the coefficient table");
    Cplx<R> s1(R(p.s1.re), R(p.s1.im)), s2(R(p.s2.re), R(p.s2.im));
    auto l1 = L_value<R>(*sd.form, s1);
    auto l2 = L_value<R>(*sd.form, s2);
    const R pi = real_const<R>::pi();
    Cplx<R> pref(R(2.0) * pi * pi / R(double(p.weight - 1)), R(0.0));
    return pref * Cplx<R>(lambda<R>(*sd.form, p.index), R(0.0)) * l1.value * l2.value /
           Cplx<R>(sd.norm.sym2_at_1, R(0.0));
}

inline void check_region(const SpectralParams& p) {
    if (!weight_supported(p.weight))
        throw UnsupportedWeightError("verify: unsupported weight " +
                                     std::to_string(p.weight));
    if (p.index < 1) throw RegionError("verify: index must be >= 1");
    double lim = p.weight / 2.0 - 1.0;
    if (std::fabs(p.s1.re) >= lim || std::fabs(p.s2.re) >= lim)
        throw RegionError("verify: |Re s| < k/2 - 1 violated");
    CplxD diff = p.s1 - p.s2;
    bool central = to_double(abs(p.s1)) < 1e-12 && to_double(abs(p.s2)) < 1e-12;
    if (central) return;
    if (std::fabs(diff.re - std::round(diff.re)) < 1e-9 && std::fabs(diff.im) < 1e-9)
        throw RegionError("verify: s1 - s2 is an integer (and not the central point)");
    CplxD sum = p.s1 + p.s2;
    if (to_double(abs(sum)) < 1e-9)
        throw RegionError("verify: s1 + s2 = 0 sits on the main-term pole set");
}

template <class R>
VerificationReport verify_impl(const SpectralParams& p, const ToleranceConfig& cfg) {
    namespace chr = std::chrono;
    VerificationReport rep;
    rep.params = p;
    rep.precision = precision_name(effective_precision(cfg.precision, p.weight));
    check_region(p);

    auto t0 = chr::steady_clock::now();
    Cplx<R> spec = spectral_total_impl<R>(p, cfg);
    auto t1 = chr::steady_clock::now();
    Cplx<R> s1(R(p.s1.re), R(p.s1.im)), s2(R(p.s2.re), R(p.s2.im));
    MomentBreakdown<R> br =
        geometric_total<R>(p.weight, p.index, s1, s2, cfg.series_tol, cfg.series_cap);
    auto t2 = chr::steady_clock::now();

    rep.spectral = geo_detail::approx(spec);
    for (int i = 0; i < 4; ++i) rep.m2[size_t(i)] = geo_detail::approx(br.m2[size_t(i)]);
    rep.e1 = geo_detail::approx(br.e1);
    rep.e2 = geo_detail::approx(br.e2);
    rep.e3 = geo_detail::approx(br.e3);
    rep.geometric = geo_detail::approx(br.total);
    rep.e1_terms = br.e1_terms;
    rep.e3_terms = br.e3_terms;
    rep.central_path = br.central_path;

    R absres = abs(spec - br.total);
    R spec_mag = abs(spec);
    rep.abs_residual = to_double(absres);
    rep.rel_residual =
        to_double(spec_mag) > 0.0 ? to_double(absres / spec_mag) : rep.abs_residual;
    // relative criterion, switching to absolute when the spectral side is
    // itself at the forced-vanishing scale
    if (to_double(spec_mag) < 1e-10)
        rep.pass = rep.abs_residual < cfg.identity_tol;
    else
        rep.pass = rep.rel_residual < cfg.identity_tol;

    rep.spectral_ms = chr::duration<double, std::milli>(t1 - t0).count();
    rep.geometric_ms = chr::duration<double, std::milli>(t2 - t1).count();
    rep.cache_id =
        spectral_data<R>(p.weight, cfg.table_length, cfg.cache_dir, cfg.quadrature_cap)
            .form->provenance;
    return rep;
}

} // namespace verify_detail

inline CplxD spectral_total(const SpectralParams& p, const ToleranceConfig& cfg) {
    cfg.validate();
    if (!weight_supported(p.weight))
        throw UnsupportedWeightError("spectral_total: unsupported weight " +
                                     std::to_string(p.weight));
    if (effective_precision(cfg.precision, p.weight) == Precision::DoubleDouble) {
        auto v = verify_detail::spectral_total_impl<DDouble>(p, cfg);
        return CplxD(to_double(v.re), to_double(v.im));
    }
    return verify_detail::spectral_total_impl<double>(p, cfg);
}

inline VerificationReport verify_identity(const SpectralParams& p,
                                          const ToleranceConfig& cfg) {
    cfg.validate();
    if (effective_precision(cfg.precision, p.weight) == Precision::DoubleDouble)
        return verify_detail::verify_impl<DDouble>(p, cfg);
    return verify_detail::verify_impl<double>(p, cfg);
}

inline VerificationReport verify_corollary(int k, long n, const ToleranceConfig& cfg) {
    SpectralParams p;
    p.weight = k;
    p.index = n;
    p.s1 = CplxD(0.0, 0.0);
    p.s2 = CplxD(0.0, 0.0);
    return verify_identity(p, cfg);
}

// batch scan; per-point failures are captured in the report, timings are
// zeroed so identical scans serialize identically
std::vector<VerificationReport> scan(const std::vector<SpectralParams>& grid,
                                     const ToleranceConfig& cfg, bool parallel = true);

} // namespace rtf

#endif
