#ifndef RTF_MODFORMS_BIGINT_HPP
#define RTF_MODFORMS_BIGINT_HPP

// Arbitrary-size signed integers for q-expansion coefficients.  The
// Fourier coefficients grow like n^{(k-1)/2} (about 10^41 at k = 26,
// n = 2000), and the Hecke identities are asserted exactly in integers,
// so everything upstream of the floating conversion stays exact.

#include <cstdint>
#include <string>
#include <vector>

#include "rtf/dd.hpp"

namespace rtf {

class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(int v) : BigInt((long long)v) {}
    BigInt(long v) : BigInt((long long)v) {}
    BigInt(long long v);
    explicit BigInt(__int128 v);

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);

    // exact division by a small positive integer; throws if a remainder is left
    BigInt divexact(std::uint64_t d) const;

    double to_double() const { return to_dd().hi; }
    DDouble to_dd() const;

    template <class R> R to_real() const;

private:
    int sign_; // -1, 0, +1
    std::vector<std::uint64_t> mag_; // little-endian, normalized

    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    void trim();
};

template <> inline double BigInt::to_real<double>() const { return to_double(); }
template <> inline DDouble BigInt::to_real<DDouble>() const { return to_dd(); }

} // namespace rtf

#endif
