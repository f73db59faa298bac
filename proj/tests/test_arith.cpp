#include <doctest.h>

#include "fjump/arith.hpp"
#include "oracles.hpp"

using namespace fjump;

TEST_SUITE_BEGIN("arith");

TEST_CASE("prime construction") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(7919).value() == 7919);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(0), std::invalid_argument);
    CHECK_THROWS_AS(Prime(91), std::invalid_argument); // 7 * 13
    CHECK_THROWS_AS(Prime(Integer("340282366920938463463374607431768211507")),
                    std::invalid_argument);
}

TEST_CASE("base_p_digits examples") {
    CHECK(base_p_digits(Natural(11), Prime(2)) == std::vector<std::uint64_t>{1, 1, 0, 1});
    CHECK(base_p_digits(Natural(0), Prime(5)).empty());
    CHECK(base_p_digits(Natural(5), Prime(5)) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("base_p_digits round-trips") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        Prime prime(p);
        for (std::uint64_t a = 0; a < 2000; a += 17) {
            auto digits = base_p_digits(Natural(a), prime);
            if (!digits.empty()) CHECK(digits.back() != 0);
            Natural back(0), scale(1);
            for (auto d : digits) {
                CHECK(d < p);
                back += Natural(d) * scale;
                scale *= p;
            }
            CHECK(back == Natural(a));
        }
    }
}

TEST_CASE("binom_mod_p examples") {
    CHECK(binom_mod_p(6, 2, Prime(2)) == 1); // C(6,2) = 15
    CHECK(binom_mod_p(123, 0, Prime(7)) == 1);
    CHECK(binom_mod_p(6, 3, Prime(3)) == 2); // C(6,3) = 20
    CHECK(binom_mod_p(3, 5, Prime(5)) == 0);
}

TEST_CASE("binom_mod_p against the Pascal oracle, all n and k up to 200") {
    // One exact Pascal triangle, reduced against each prime.
    std::vector<std::vector<Integer>> triangle(201);
    triangle[0] = {Integer(1)};
    for (std::size_t n = 1; n <= 200; ++n) {
        triangle[n].assign(n + 1, Integer(1));
        for (std::size_t k = 1; k < n; ++k)
            triangle[n][k] = triangle[n - 1][k - 1] + triangle[n - 1][k];
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        Prime prime(p);
        std::size_t mismatches = 0;
        for (std::uint64_t n = 0; n <= 200; ++n) {
            for (std::uint64_t k = 0; k <= n; ++k) {
                Integer expected;
                mpz_fdiv_r(expected.get_mpz_t(), triangle[n][k].get_mpz_t(),
                           Integer(p).get_mpz_t());
                if (Integer(binom_mod_p(n, k, prime)) != expected) ++mismatches;
            }
        }
        CHECK(mismatches == 0);
        CHECK(binom_mod_p(201, 250, prime) == 0); // k > n beyond the table too
    }
}

TEST_CASE("lucas digit factorization agrees with direct scaling") {
    // C(t p^e, p^e) = t mod p for small t, the shape used downstream.
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        Prime prime(p);
        for (std::uint64_t e = 1; e <= 3; ++e) {
            std::uint64_t pe = prime_power_u64(prime, static_cast<unsigned>(e));
            for (std::uint64_t t = 0; t < p; ++t)
                CHECK(binom_mod_p(t * pe, pe, prime) == t % p);
        }
    }
}

TEST_CASE("ceil_scale examples") {
    CHECK(ceil_scale(Rational(Integer(5), Integer(6)), Prime(7), 1) == Natural(6));
    CHECK(ceil_scale(Rational(1), Prime(3), 4) == Natural(81));
    CHECK(ceil_scale(Rational(Integer(4), Integer(5)), Prime(5), 2) == Natural(20));
    CHECK_THROWS_AS(ceil_scale(Rational(-1), Prime(5), 1), std::invalid_argument);
}

TEST_CASE("ceil_scale brackets t p^e") {
    for (std::uint64_t b = 1; b <= 64; b += 5) {
        for (std::uint64_t a = 0; a <= 2 * b; a += 3) {
            Rational t{Integer(a), Integer(b)};
            for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{5, 5},
                                {2, 11},
                                {3, 7},
                                {7, 4}}) {
                Natural s = ceil_scale(t, Prime(p), e);
                Natural pe = prime_power(Prime(p), e);
                // s - 1 < t p^e <= s
                CHECK(Rational(Integer(s - 1)) < t * Rational(Integer(pe)));
                CHECK(t * Rational(Integer(pe)) <= Rational(Integer(s)));
            }
        }
    }
}

TEST_CASE("prime_power cap") {
    CHECK(prime_power_u64(Prime(2), 20) == (1u << 20));
    CHECK_THROWS_AS(prime_power(Prime(2), 21), ResourceError);
    ResourceCaps loose;
    loose.max_pe = std::uint64_t{1} << 30;
    CHECK(prime_power_u64(Prime(2), 21, loose) == (std::uint64_t{1} << 21));
}

TEST_CASE("rational canonical form") {
    Rational q(Integer(4), Integer(-6));
    CHECK(q.num() == -2);
    CHECK(q.den() == 3);
    CHECK(q.str() == "-2/3");
    CHECK(Rational::parse("4/6") == Rational(Integer(2), Integer(3)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("simplest_in_halfopen matches the scan oracle") {
    // Dense sweep over small half-open intervals.
    std::vector<Rational> points;
    for (std::uint64_t d = 1; d <= 9; ++d)
        for (std::uint64_t a = 0; a <= 2 * d; ++a) points.emplace_back(Integer(a), Integer(d));
    for (const auto& lo : points) {
        for (const auto& hi : points) {
            if (!(lo < hi)) continue;
            auto got = simplest_in_halfopen(lo, hi, 64);
            auto expected = oracles::min_den_scan(lo, hi, 64);
            REQUIRE(got.has_value() == expected.has_value());
            if (got) {
                CHECK(got->den() == expected->den()); // same minimal denominator
                CHECK(lo < *got);
                CHECK(*got <= hi);
            }
        }
    }
}

TEST_CASE("simplest_in_halfopen respects the denominator cap") {
    auto none = simplest_in_halfopen(Rational(Integer(100), Integer(6501)),
                                     Rational(Integer(101), Integer(6501)), 64);
    CHECK_FALSE(none.has_value());
    auto one = simplest_in_halfopen(Rational(Integer(24), Integer(25)), Rational(1), 64);
    REQUIRE(one.has_value());
    CHECK(*one == Rational(1));
}

TEST_SUITE_END();
