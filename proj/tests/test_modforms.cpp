#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "rtf/modforms/arith.hpp"
#include "rtf/modforms/qexp.hpp"

using rtf::BigInt;
using rtf::CplxD;

TEST_CASE("bigint: arithmetic, strings, conversion") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-98765432109876543210");
    CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
    CHECK((a + b).to_string() == "123456788913580246791358024680");
    CHECK((a - a).to_string() == "0");
    CHECK((BigInt(7) * BigInt(-6)).to_string() == "-42");
    CHECK(BigInt::from_string("1728").divexact(1728).to_string() == "1");
    CHECK_THROWS(BigInt::from_string("10").divexact(3));
    // round trip
    CHECK(BigInt::from_string(a.to_string()) == a);
    // to_dd: exact for values below 2^106
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    rtf::DDouble d = big.to_dd();
    // compare against scaled reconstruction: value/10^20 ~ 1234567890.12...
    CHECK(std::fabs(d.hi / 1.2345678901234567890e29 - 1.0) < 1e-15);
}

TEST_CASE("sigma_v and tau_v") {
    CHECK(rtf::sigma0(6) == 4);
    CHECK(rtf::to_double(rtf::sigma_v(CplxD(1.0, 0.0), 12).re) == doctest::Approx(28.0));
    CHECK(rtf::to_double(rtf::sigma_v(CplxD(0.7, -1.3), 1).re) == 1.0);

    // brute-force divisor enumeration oracle at v = 0.3 + 0.2i, n = 720
    CplxD v(0.3, 0.2);
    CplxD direct(0.0, 0.0);
    for (long d : rtf::divisors(720)) direct += rtf::rpow(double(d), v);
    CplxD fast = rtf::sigma_v(v, 720);
    CHECK(rtf::to_double(rtf::abs(fast - direct)) < 1e-12 * rtf::to_double(rtf::abs(direct)));

    // tau_v(1) = 1, tau_0(n) = sigma_0(n)
    CHECK(rtf::to_double(rtf::tau_v(CplxD(1.0, 1.0), 1).re) == doctest::Approx(1.0));
    CHECK(rtf::to_double(rtf::tau_v(CplxD(0.0, 0.0), 360).re) ==
          doctest::Approx(double(rtf::sigma0(360))));

    // tau_v(36) by factor-pair enumeration at v = 1 + i
    CplxD v2(1.0, 1.0);
    CplxD pairs(0.0, 0.0);
    for (long n1 = 1; n1 <= 36; ++n1) {
        if (36 % n1) continue;
        long n2 = 36 / n1;
        pairs += rtf::rpow(double(n1), v2) * rtf::rpow(double(n2), -v2);
    }
    CHECK(rtf::to_double(rtf::abs(rtf::tau_v(v2, 36) - pairs)) < 1e-12);

    // symmetries on random samples: sigma_v(n) = n^v sigma_{-v}(n); tau_v = tau_{-v};
    // growth bound tau_v(n) <= n^{|Re v| + 0.1} at these desk sizes
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> Uv(-2.0, 2.0);
    std::uniform_int_distribution<long> Un(1, 5000);
    for (int i = 0; i < 200; ++i) {
        CplxD w(Uv(rng), Uv(rng));
        long n = Un(rng);
        CplxD lhs = rtf::sigma_v(w, n);
        CplxD rhs = rtf::rpow(double(n), w) * rtf::sigma_v(-w, n);
        CHECK(rtf::to_double(rtf::abs(lhs - rhs)) <=
              1e-13 * std::max(1.0, rtf::to_double(rtf::abs(lhs))));
        CplxD t1 = rtf::tau_v(w, n), t2 = rtf::tau_v(-w, n);
        CHECK(rtf::to_double(rtf::abs(t1 - t2)) <=
              1e-13 * std::max(1.0, rtf::to_double(rtf::abs(t1))));
        // exact bound |tau_v(n)| <= d(n) n^{|Re v|}; the n^{|Re v|+0.1} growth
        // bound carries an implied constant, realized here as 25 for n <= 5000
        CHECK(rtf::to_double(rtf::abs(t1)) <=
              double(rtf::sigma0(n)) * std::pow(double(n), std::fabs(w.re)) * 1.0000001);
        CHECK(rtf::to_double(rtf::abs(t1)) <=
              25.0 * std::pow(double(n), std::fabs(w.re) + 0.1));
    }
}

TEST_CASE("delta: independent direct-product oracle fixes tau(2), tau(3), tau(6)") {
    auto oracle = rtf::delta_qexp_direct_oracle(12);
    CHECK(oracle.coeff(1).to_string() == "1");
    CHECK(oracle.coeff(2).to_string() == "-24");
    // multiplicativity from the oracle itself
    CHECK(oracle.coeff(6) == oracle.coeff(2) * oracle.coeff(3));

    auto fast = rtf::delta_qexp(256);
    for (long n = 1; n <= 12; ++n) CHECK(fast.coeff(n) == oracle.coeff(n));
    CHECK(fast.coeff(1).to_string() == "1");
}

TEST_CASE("eisenstein coefficients and the 1728 identity") {
    auto e4 = rtf::eisenstein_qexp(4, 200);
    auto e6 = rtf::eisenstein_qexp(6, 200);
    CHECK(e4.coeff(1).to_string() == "240");
    CHECK(e6.coeff(2).to_string() == "-16632"); // -504 * sigma_5(2), sigma_5(2) = 33
    // Delta = (E4^3 - E6^2)/1728 coefficient-wise
    auto e4cubed = rtf::mul_qexp(rtf::mul_qexp(e4, e4), e4);
    auto e6sq = rtf::mul_qexp(e6, e6);
    auto delta = rtf::delta_qexp(200);
    CHECK((e4cubed.coeff(0) - e6sq.coeff(0)).to_string() == "0");
    for (long n = 1; n <= 200; ++n) {
        BigInt lhs = (e4cubed.coeff(n) - e6sq.coeff(n)).divexact(1728);
        CHECK(lhs == delta.coeff(n));
    }
}

TEST_CASE("eigenforms: normalization, a(2) at weight 16, exact Hecke structure") {
    CHECK_THROWS_AS(rtf::eigenform(14, 10), rtf::UnsupportedWeightError);
    CHECK_THROWS_AS(rtf::eigenform(24, 10), rtf::UnsupportedWeightError);

    auto f16 = rtf::eigenform(16, 400);
    CHECK(f16.qexp.coeff(1).to_string() == "1");
    // a(2) = tau(2) + 240 tau(1) = -24 + 240 = 216
    CHECK(f16.qexp.coeff(2).to_string() == "216");
    CHECK(f16.qexp.coeff(6) == f16.qexp.coeff(2) * f16.qexp.coeff(3));

    for (int k : rtf::kSupportedWeights) {
        auto f = rtf::eigenform(k, 400);
        CHECK(f.qexp.coeff(1).to_string() == "1");
        // multiplicativity on coprime pairs
        for (long m = 2; m <= 20; ++m)
            for (long n = m + 1; m * n <= 400; ++n)
                if (std::gcd(m, n) == 1) CHECK(f.qexp.coeff(m * n) == f.qexp.coeff(m) * f.qexp.coeff(n));
        // Hecke recursion at prime powers: a(p^{r+1}) = a(p)a(p^r) - p^{k-1} a(p^{r-1})
        for (long p : {2L, 3L, 5L, 7L}) {
            BigInt pk(1);
            for (int i = 0; i < k - 1; ++i) pk *= BigInt(p);
            long pr = p;
            while (pr * p <= 400) {
                BigInt lhs = f.qexp.coeff(pr * p);
                BigInt rhs = f.qexp.coeff(p) * f.qexp.coeff(pr) - pk * f.qexp.coeff(pr / p);
                CHECK(lhs == rhs);
                pr *= p;
            }
        }
    }
}

TEST_CASE("lambda normalization and the Deligne bound as a sanity scan") {
    auto f = rtf::eigenform(12, 1000);
    // lambda(2) = -24 / 2^{5.5}
    double lam2 = f.qexp.coeff(2).to_double() / std::pow(2.0, 5.5);
    CHECK(lam2 == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 977L, 983L, 991L, 997L}) {
        double lam = f.qexp.coeff(p).to_double() / std::pow(double(p), 5.5);
        CHECK(std::fabs(lam) <= 2.0);
    }
}

TEST_CASE("qexp cache file round-trips bit-exactly") {
    auto f = rtf::eigenform(26, 64);
    std::ostringstream os;
    rtf::write_qexp(os, f.qexp);
    std::string first = os.str();
    std::istringstream is(first);
    auto back = rtf::read_qexp(is);
    std::ostringstream os2;
    rtf::write_qexp(os2, back);
    CHECK(os2.str() == first);
    CHECK(back.weight == 26);
    for (long n = 1; n <= 64; ++n) CHECK(back.coeff(n) == f.qexp.coeff(n));
}

TEST_CASE("delta cap raises ResourceError") {
    CHECK_THROWS_AS(rtf::delta_qexp(100000), rtf::ResourceError);
}
