#include "rtf/modforms/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtf {

BigInt::BigInt(long long v) : sign_(0) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    mag_.push_back(m);
}

BigInt::BigInt(__int128 v) : sign_(0) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned __int128 m = v > 0 ? (unsigned __int128)v : -(unsigned __int128)v;
    while (m) {
        mag_.push_back((std::uint64_t)m);
        m >>= 64;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint64_t> BigInt::add_mag(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint64_t> r(hi.size() + 1, 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        unsigned __int128 s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = (std::uint64_t)s;
        carry = s >> 64;
    }
    r[hi.size()] = (std::uint64_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<std::uint64_t> BigInt::sub_mag(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(a.size(), 0);
    unsigned __int128 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned __int128 d = (unsigned __int128)a[i] - (i < b.size() ? b[i] : 0) - borrow;
        r[i] = (std::uint64_t)d;
        borrow = (d >> 64) ? 1 : 0;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            unsigned __int128 cur =
                (unsigned __int128)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
            r.mag_[i + j] = (std::uint64_t)cur;
            carry = cur >> 64;
        }
        size_t k = i + b.mag_.size();
        while (carry) {
            unsigned __int128 cur = (unsigned __int128)r.mag_[k] + carry;
            r.mag_[k] = (std::uint64_t)cur;
            carry = cur >> 64;
            ++k;
        }
    }
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::divexact(std::uint64_t d) const {
    if (d == 0) throw std::invalid_argument("BigInt::divexact: zero divisor");
    if (sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size(), 0);
    unsigned __int128 rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | mag_[i];
        r.mag_[i] = (std::uint64_t)(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::invalid_argument("BigInt::divexact: inexact division");
    r.trim();
    return r;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt::from_string: empty");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt::from_string: bad digit");
        // r = r*10 + d
        unsigned __int128 carry = (unsigned)(s[i] - '0');
        for (size_t j = 0; j < r.mag_.size(); ++j) {
            unsigned __int128 cur = (unsigned __int128)r.mag_[j] * 10 + carry;
            r.mag_[j] = (std::uint64_t)cur;
            carry = cur >> 64;
        }
        if (carry) r.mag_.push_back((std::uint64_t)carry);
    }
    r.trim();
    if (!r.mag_.empty()) r.sign_ = sign;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint64_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        unsigned __int128 rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | m[i];
            m[i] = (std::uint64_t)(cur / 1000000000000000000ULL);
            rem = cur % 1000000000000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::uint64_t chunk = (std::uint64_t)rem;
        for (int d = 0; d < 18; ++d) {
            digits.push_back(char('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

DDouble BigInt::to_dd() const {
    if (sign_ == 0) return DDouble(0.0);
    // fold the top three limbs in dd arithmetic (192 bits > the 106-bit target),
    // then scale by the discarded limbs
    DDouble acc(0.0);
    size_t top = mag_.size();
    size_t take = std::min<size_t>(3, top);
    for (size_t i = 0; i < take; ++i) {
        acc = ldexp(acc, 64);
        acc = acc + DDouble(double(mag_[top - 1 - i] >> 32)) * DDouble(4294967296.0) +
              DDouble(double(mag_[top - 1 - i] & 0xffffffffULL));
    }
    int shift = 64 * int(top - take);
    acc = ldexp(acc, shift);
    return sign_ > 0 ? acc : -acc;
}

} // namespace rtf
