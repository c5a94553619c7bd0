#include "rtf/modforms/qexp.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace rtf {

bool weight_supported(int k) {
    for (int w : kSupportedWeights)
        if (w == k) return true;
    return false;
}

namespace {

constexpr long kDeltaCap = 40000;

// coefficients of prod (1-q^m)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}
std::vector<std::int64_t> eta3(long len) {
    std::vector<std::int64_t> c(size_t(len), 0);
    for (long j = 0;; ++j) {
        long idx = j * (j + 1) / 2;
        if (idx >= len) break;
        c[size_t(idx)] = (j % 2 == 0) ? (2 * j + 1) : -(2 * j + 1);
    }
    return c;
}

std::vector<std::int64_t> square_i64(const std::vector<std::int64_t>& p, long len) {
    std::vector<std::int64_t> r(size_t(len), 0);
    for (long i = 0; i < len; ++i) {
        if (p[size_t(i)] == 0) continue;
        long jmax = len - 1 - i;
        for (long j = i; j <= jmax && j < (long)p.size(); ++j) {
            std::int64_t prod = p[size_t(i)] * p[size_t(j)];
            r[size_t(i + j)] += (i == j) ? prod : 2 * prod;
        }
    }
    return r;
}

std::vector<__int128> square_i64_to_i128(const std::vector<std::int64_t>& p, long len) {
    std::vector<__int128> r(size_t(len), 0);
    for (long i = 0; i < len; ++i) {
        if (p[size_t(i)] == 0) continue;
        long jmax = len - 1 - i;
        for (long j = i; j <= jmax && j < (long)p.size(); ++j) {
            __int128 prod = (__int128)p[size_t(i)] * p[size_t(j)];
            r[size_t(i + j)] += (i == j) ? prod : 2 * prod;
        }
    }
    return r;
}

} // namespace

QExpansion delta_qexp(long N) {
    if (N < 1) throw RangeError("delta_qexp: N >= 1 required");
    if (N > kDeltaCap) throw ResourceError("delta_qexp: N exceeds configured cap");
    // Delta = q * prod (1-q^m)^24, so tau(n) sits at power n-1 of the product
    long len = N;
    auto p3 = eta3(len);
    auto p6 = square_i64(p3, len);
    auto p12 = square_i64(p6, len);
    auto p24 = square_i64_to_i128(p12, len);
    QExpansion q;
    q.weight = 12;
    q.count = N;
    q.a0 = BigInt();
    q.a.reserve(size_t(N));
    for (long n = 1; n <= N; ++n) q.a.emplace_back(p24[size_t(n - 1)]);
    return q;
}

QExpansion delta_qexp_direct_oracle(long N) {
    if (N < 1 || N > 4000)
        throw ResourceError("delta_qexp_direct_oracle: oracle is for small N");
    const size_t len = size_t(N);
    std::vector<BigInt> p(len);
    p[0] = BigInt(1);
    for (long m = 1; m < N; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (long i = N - 1; i >= m; --i) p[size_t(i)] -= p[size_t(i - m)];
    QExpansion q;
    q.weight = 12;
    q.count = N;
    q.a.reserve(size_t(N));
    for (long n = 1; n <= N; ++n) q.a.push_back(p[size_t(n - 1)]);
    return q;
}

QExpansion eisenstein_qexp(int weight, long N) {
    if (weight != 4 && weight != 6)
        throw DomainError("eisenstein_qexp: weight must be 4 or 6");
    if (N < 1) throw RangeError("eisenstein_qexp: N >= 1 required");
    const int v = (weight == 4) ? 3 : 5;
    const long long scale = (weight == 4) ? 240 : -504;
    std::vector<BigInt> sig(size_t(N + 1));
    for (long d = 1; d <= N; ++d) {
        __int128 pw = 1;
        for (int i = 0; i < v; ++i) pw *= d;
        BigInt pb(pw);
        for (long n = d; n <= N; n += d) sig[size_t(n)] += pb;
    }
    QExpansion q;
    q.weight = weight;
    q.count = N;
    q.a0 = BigInt(1);
    q.a.reserve(size_t(N));
    BigInt sc(scale);
    for (long n = 1; n <= N; ++n) q.a.push_back(sc * sig[size_t(n)]);
    return q;
}

QExpansion mul_qexp(const QExpansion& A, const QExpansion& B) {
    long N = std::min(A.count, B.count);
    std::vector<BigInt> fa(size_t(N) + 1), fb(size_t(N) + 1), fc(size_t(N) + 1);
    fa[0] = A.a0;
    fb[0] = B.a0;
    for (long n = 1; n <= N; ++n) {
        fa[size_t(n)] = A.a[size_t(n - 1)];
        fb[size_t(n)] = B.a[size_t(n - 1)];
    }
    for (long i = 0; i <= N; ++i) {
        if (fa[size_t(i)].is_zero()) continue;
        for (long j = 0; i + j <= N; ++j) {
            if (fb[size_t(j)].is_zero()) continue;
            fc[size_t(i + j)] += fa[size_t(i)] * fb[size_t(j)];
        }
    }
    QExpansion q;
    q.weight = A.weight + B.weight;
    q.count = N;
    q.a0 = fc[0];
    q.a.assign(fc.begin() + 1, fc.end());
    return q;
}

Eigenform eigenform(int k, long N) {
    if (!weight_supported(k))
        throw UnsupportedWeightError("eigenform: weight " + std::to_string(k) +
                                     " is not a one-dimensional level-1 weight");
    QExpansion base = delta_qexp(N);
    QExpansion out;
    switch (k) {
        case 12: out = base; break;
        case 16: out = mul_qexp(base, eisenstein_qexp(4, N)); break;
        case 18: out = mul_qexp(base, eisenstein_qexp(6, N)); break;
        case 20: {
            QExpansion e4 = eisenstein_qexp(4, N);
            out = mul_qexp(mul_qexp(base, e4), e4);
            break;
        }
        case 22: out = mul_qexp(mul_qexp(base, eisenstein_qexp(4, N)), eisenstein_qexp(6, N)); break;
        default: { // 26
            QExpansion e4 = eisenstein_qexp(4, N);
            out = mul_qexp(mul_qexp(mul_qexp(base, e4), e4), eisenstein_qexp(6, N));
            break;
        }
    }
    out.weight = k;
    Eigenform f;
    f.weight = k;
    f.qexp = std::move(out);
    f.provenance = "builtin:k=" + std::to_string(k) + ":N=" + std::to_string(N);
    return f;
}

void write_qexp(std::ostream& os, const QExpansion& q) {
    os << "QEXP1 weight=" << q.weight << " count=" << q.count << "\n";
    for (long n = 1; n <= q.count; ++n)
        os << n << " " << q.a[size_t(n - 1)].to_string() << "\n";
}

QExpansion read_qexp(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw RangeError("read_qexp: empty stream");
    int k = 0;
    long n_count = 0;
    if (std::sscanf(header.c_str(), "QEXP1 weight=%d count=%ld", &k, &n_count) != 2)
        throw RangeError("read_qexp: bad header");
    QExpansion q;
    q.weight = k;
    q.count = n_count;
    q.a.reserve(size_t(n_count));
    std::string line;
    for (long n = 1; n <= n_count; ++n) {
        if (!std::getline(is, line)) throw RangeError("read_qexp: truncated file");
        std::istringstream ls(line);
        long idx;
        std::string digits;
        if (!(ls >> idx >> digits) || idx != n)
            throw RangeError("read_qexp: bad coefficient line");
        q.a.push_back(BigInt::from_string(digits));
    }
    return q;
}

void save_qexp(const std::string& path, const QExpansion& q) {
    std::ofstream os(path);
    if (!os) throw ResourceError("save_qexp: cannot open " + path);
    write_qexp(os, q);
}

QExpansion load_qexp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ResourceError("load_qexp: cannot open " + path);
    return read_qexp(is);
}

const Eigenform& eigenform_cached(int k, long N, const std::string& cache_dir) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, std::unique_ptr<Eigenform>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, N);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    std::unique_ptr<Eigenform> f;
    if (!cache_dir.empty()) {
        auto path = std::filesystem::path(cache_dir) /
                    ("qexp_k" + std::to_string(k) + "_N" + std::to_string(N) + ".txt");
        if (std::filesystem::exists(path)) {
            f = std::make_unique<Eigenform>();
            f->weight = k;
            f->qexp = load_qexp(path.string());
            f->provenance = "file:" + path.string();
        } else {
            f = std::make_unique<Eigenform>(eigenform(k, N));
            std::filesystem::create_directories(cache_dir);
            save_qexp(path.string(), f->qexp);
        }
    } else {
        f = std::make_unique<Eigenform>(eigenform(k, N));
    }
    const Eigenform& ref = *f;
    cache.emplace(key, std::move(f));
    return ref;
}

} // namespace rtf
