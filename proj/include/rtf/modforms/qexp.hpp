#ifndef RTF_MODFORMS_QEXP_HPP
#define RTF_MODFORMS_QEXP_HPP

// Exact integer q-expansions for the level-1 story: Delta through the
// Jacobi cube identity and repeated squaring, E4/E6 by divisor sieves,
// and the normalized Hecke eigenforms of the one-dimensional weights
// {12, 16, 18, 20, 22, 26} as Delta times a monomial in E4, E6.
//
// File cache format ("QEXP1"):
//   QEXP1 weight=<k> count=<N>
//   <n> <a(n)>        for n = 1..N, decimal integers
// Round-trips are bit-exact.

#include <iosfwd>
#include <string>
#include <vector>

#include "rtf/errors.hpp"
#include "rtf/modforms/bigint.hpp"

namespace rtf {

struct QExpansion {
    int weight = 0;
    long count = 0;        // coefficients a(1..count)
    BigInt a0;             // constant term (zero for cusp forms)
    std::vector<BigInt> a; // a[n-1] = coefficient of q^n

    const BigInt& coeff(long n) const {
        if (n == 0) return a0;
        if (n < 1 || n > count) throw RangeError("QExpansion: index beyond table");
        return a[size_t(n - 1)];
    }
};

inline constexpr int kSupportedWeights[] = {12, 16, 18, 20, 22, 26};
bool weight_supported(int k);

// tau(1..N) by eta^3 -> eta^6 -> eta^12 -> eta^24 squarings (int64 up to
// eta^12, one int128 pass for eta^24).  N capped at 40000 to keep the
// intermediate coefficients inside their machine types.
QExpansion delta_qexp(long N);

// independent check: multiply out prod_{m<=N} (1-q^m)^24 one factor at a
// time in BigInt, O(24 N^2); small N only
QExpansion delta_qexp_direct_oracle(long N);

QExpansion eisenstein_qexp(int weight, long N); // weight 4 or 6

QExpansion mul_qexp(const QExpansion& A, const QExpansion& B); // truncated product

struct Eigenform {
    int weight = 0;
    QExpansion qexp;
    std::string provenance; // cache id for reports
};

// the unique normalized eigenform: Delta * {1, E4, E6, E4^2, E4 E6, E4^2 E6}
Eigenform eigenform(int k, long N);

void write_qexp(std::ostream& os, const QExpansion& q);
QExpansion read_qexp(std::istream& is);
void save_qexp(const std::string& path, const QExpansion& q);
QExpansion load_qexp(const std::string& path);

// process-wide cache of eigenforms keyed by (weight, N); thread-safe
const Eigenform& eigenform_cached(int k, long N, const std::string& cache_dir = "");

} // namespace rtf

#endif
