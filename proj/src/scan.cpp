#include "rtf/verify.hpp"

#include <atomic>
#include <future>
#include <thread>

namespace rtf {

namespace {

VerificationReport run_point(const SpectralParams& p, const ToleranceConfig& cfg) {
    VerificationReport rep;
    try {
        rep = verify_identity(p, cfg);
    } catch (const Error& e) {
        rep.params = p;
        rep.precision = precision_name(effective_precision(cfg.precision, p.weight));
        rep.pass = false;
        rep.error = e.what();
    }
    rep.spectral_ms = 0.0;
    rep.geometric_ms = 0.0;
    return rep;
}

} // namespace

std::vector<VerificationReport> scan(const std::vector<SpectralParams>& grid,
                                     const ToleranceConfig& cfg, bool parallel) {
    cfg.validate();
    std::vector<VerificationReport> out(grid.size());
    if (!parallel || grid.size() < 2) {
        for (size_t i = 0; i < grid.size(); ++i) out[i] = run_point(grid[i], cfg);
        return out;
    }
    // eigenform/norm caches are built once up front so worker threads only read
    for (const auto& p : grid) {
        if (!weight_supported(p.weight)) continue;
        if (effective_precision(cfg.precision, p.weight) == Precision::DoubleDouble)
            spectral_data<DDouble>(p.weight, cfg.table_length, cfg.cache_dir);
        else
            spectral_data<double>(p.weight, cfg.table_length, cfg.cache_dir);
    }
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= grid.size()) return;
                out[i] = run_point(grid[i], cfg);
            }
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

} // namespace rtf
