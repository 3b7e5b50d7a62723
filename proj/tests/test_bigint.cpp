// Property tests for the exact integer/rational types against native oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/bigint.hpp"

using k3::BigInt;
using k3::Rat;

TEST_CASE("small arithmetic matches int64") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_i64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_i64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_i64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_i64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_i64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("divmod identity on large values") {
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 300; ++i) {
        BigInt a = BigInt(d(rng)) * BigInt(d(rng)) * BigInt(d(rng));
        BigInt b = BigInt(d(rng)) * BigInt(d(rng));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("powers and printing") {
    BigInt p(1);
    for (int i = 0; i < 12; ++i) p = p * BigInt(8);
    CHECK(p.to_string() == "68719476736");  // 8^12
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f = f * BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");  // 30!
    CHECK((f / f).to_i64() == 1);
    CHECK((f % (f - BigInt(1))).to_i64() == 1);
}

TEST_CASE("gcd and exact division") {
    CHECK(k3::gcd(BigInt(48), BigInt(-36)).to_i64() == 12);
    CHECK(k3::gcd(BigInt(0), BigInt(7)).to_i64() == 7);
    CHECK(k3::exact_div(BigInt(91), BigInt(7)).to_i64() == 13);
    CHECK_THROWS(k3::exact_div(BigInt(92), BigInt(7)));
}

TEST_CASE("rationals normalize and compute") {
    Rat half(BigInt(1), BigInt(2));
    Rat third(BigInt(-2), BigInt(-6));
    CHECK(third.num.to_i64() == 1);
    CHECK(third.den.to_i64() == 3);
    Rat s = half + third;
    CHECK(s == Rat(BigInt(5), BigInt(6)));
    CHECK((half * third) == Rat(BigInt(1), BigInt(6)));
    CHECK((half - half).is_zero());
    CHECK((half / third) == Rat(BigInt(3), BigInt(2)));
    CHECK(Rat(BigInt(4), BigInt(2)).is_integer());
}
