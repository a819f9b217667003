#include <doctest.h>

#include <random>

#include "cbspline/bigreal.hpp"
#include "cbspline/rational.hpp"
#include "cbspline/scalars.hpp"

using namespace cbspline;

namespace {

std::mt19937_64 rng(20260824);

Rational random_rational(long max_mag = 1000) {
    std::uniform_int_distribution<long> num(-max_mag, max_mag);
    std::uniform_int_distribution<long> den(1, max_mag);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(3, -2).numerator() == -3);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational field laws on random triples") {
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("rational to BigReal round trip") {
    // Exactly representable at 256 bits: dyadic denominator.
    Rational dyadic(BigInt("123456789012345678901234567"), BigInt(1) << 40);
    BigReal x(dyadic, 256);
    CHECK(x.to_rational() == dyadic);

    // Non-representable value differs by at most 1 ulp.
    Rational third(1, 3);
    BigReal y(third, 256);
    Rational back = y.to_rational();
    Rational err = abs(back - third);
    Rational ulp = Rational(1, 3) / Rational(BigInt(BigInt(1) << 255));
    CHECK(err <= ulp);

    for (int i = 0; i < 100; ++i) {
        Rational q = random_rational(1000000);
        BigReal z(q, 256);
        Rational rel = q.is_zero() ? abs(z.to_rational() - q)
                                   : abs((z.to_rational() - q) / q);
        CHECK(rel <= Rational(BigInt(1), BigInt(BigInt(1) << 255)));
    }
}

TEST_CASE("cos_pi_multiple exact quarter-period values") {
    CHECK(cos_pi_multiple(0, 1) == BigReal(1L, 256));
    CHECK(cos_pi_multiple(1, 2).is_zero());
    CHECK(cos_pi_multiple(3, 2).is_zero());
    CHECK(cos_pi_multiple(1, 1) == BigReal(-1L, 256));
    CHECK(cos_pi_multiple(2, 1) == BigReal(1L, 256));
    CHECK(cos_pi_multiple(-7, 2).is_zero());
    CHECK_THROWS_AS(cos_pi_multiple(1, 0), std::invalid_argument);
}

TEST_CASE("cos pi/3 equals one half to 4 ulp") {
    BigReal c = cos_pi_multiple(1, 3, 256);
    BigReal half(Rational(1, 2), 256);
    BigReal err = abs(c - half);
    CHECK(err <= pow2(-255, 256) * BigReal(4L, 256));
}

TEST_CASE("cos_pi_multiple reduction invariance") {
    std::uniform_int_distribution<long long> pd(-100000, 100000);
    std::uniform_int_distribution<long long> qd(1, 500);
    for (int i = 0; i < 200; ++i) {
        long long q = qd(rng);
        long long p = pd(rng);
        long long reduced = ((p % (2 * q)) + 2 * q) % (2 * q);
        CHECK(cos_pi_multiple(p, q) == cos_pi_multiple(reduced, q));
        CHECK(cos_pi_multiple(p, q) == cos_pi_multiple(-p, q));
        CHECK(cos_pi_multiple(p, q) == cos_pi_multiple(p + 2 * q, q));
    }
}

TEST_CASE("primality: paper cases and known edge cases") {
    CHECK(is_prime(19));
    CHECK_FALSE(is_prime(20));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(341));         // 2-pseudoprime
    CHECK(is_prime(2147483647ULL));     // 2^31 - 1
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime(2305843009213693951ULL * 3));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
}
