#include <doctest.h>

#include <string>

#include "homtrees/bignat.hpp"
#include "oracles.hpp"

using homtrees::BigNat;
using homtrees::Rational;

namespace {

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return out;
}

} // namespace

TEST_CASE("bignat basics") {
    CHECK(BigNat{}.is_zero());
    CHECK(BigNat{0}.to_string() == "0");
    CHECK(BigNat{1}.to_string() == "1");
    CHECK(BigNat{18446744073709551615ull}.to_string() == "18446744073709551615");
    CHECK((BigNat{18446744073709551615ull} + BigNat{1}).to_string() ==
          "18446744073709551616");
    CHECK(BigNat{7} < BigNat{8});
    CHECK(BigNat{8} == BigNat{8});
    CHECK(BigNat{1} * BigNat{0} == BigNat{0});
}

TEST_CASE("bignat add/mul match 128-bit reference on random inputs") {
    oracles::SplitMix64 rng{20240917ull};
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t a = rng.next();
        const std::uint64_t b = rng.next();
        const unsigned __int128 sum = static_cast<unsigned __int128>(a) + b;
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        CHECK((BigNat{a} + BigNat{b}).to_string() == u128_to_string(sum));
        CHECK((BigNat{a} * BigNat{b}).to_string() == u128_to_string(prod));
    }
}

TEST_CASE("bignat pow") {
    CHECK(BigNat{2}.pow(0) == BigNat{1});
    CHECK(BigNat{0}.pow(5) == BigNat{0});
    CHECK(BigNat{3}.pow(4) == BigNat{81});
    // 3^40 against 128-bit arithmetic
    unsigned __int128 v = 1;
    for (int i = 0; i < 40; ++i) v *= 3;
    CHECK(BigNat{3}.pow(40).to_string() == u128_to_string(v));
    // multi-limb square: (2^64)^2 = 2^128
    CHECK((BigNat{2}.pow(64) * BigNat{2}.pow(64)) == BigNat{2}.pow(128));
}

TEST_CASE("bignat decimal round trip") {
    oracles::SplitMix64 rng{7ull};
    for (int trial = 0; trial < 100; ++trial) {
        BigNat x = BigNat{rng.next()} * BigNat{rng.next()} + BigNat{rng.next()};
        CHECK(BigNat::from_decimal(x.to_string()) == x);
    }
    CHECK(BigNat::from_decimal("0") == BigNat{0});
    CHECK(BigNat::from_decimal("00123") == BigNat{123});
    CHECK_THROWS_AS(BigNat::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigNat::from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("bignat self add and to_double") {
    BigNat x{12345};
    x += x;
    CHECK(x == BigNat{24690});
    CHECK(BigNat{1000000}.to_double() == doctest::Approx(1e6));
    CHECK(BigNat{2}.pow(100).to_double() ==
          doctest::Approx(1.2676506002282294e30).epsilon(1e-12));
}

TEST_CASE("rational comparison by cross multiplication") {
    Rational half{BigNat{2}, BigNat{4}};
    Rational third{BigNat{1}, BigNat{3}};
    CHECK(compare(half, third) == std::strong_ordering::greater);
    CHECK(compare(third, half) == std::strong_ordering::less);
    CHECK(compare(half, Rational{BigNat{1}, BigNat{2}}) ==
          std::strong_ordering::equal);
    CHECK(half.to_double() == doctest::Approx(0.5));
}
