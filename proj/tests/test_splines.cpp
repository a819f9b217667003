#include <doctest.h>

#include <random>

#include "cbspline/splines.hpp"

using namespace cbspline;

namespace {

// Independent oracle: the alternating binomial truncated-power sum written
// directly against gmpxx, sharing no code with the library path.
mpq_class oracle_spline(unsigned d, const mpq_class& x) {
    mpq_class sum = 0;
    for (unsigned i = 0; i <= d + 1; ++i) {
        mpq_class shifted = x - i;
        if (sgn(shifted) < 0) continue;
        mpq_class tp = 1;
        for (unsigned k = 0; k < d; ++k) tp *= shifted;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), d + 1, i);
        if (i % 2 == 0) sum += binom * tp;
        else sum -= binom * tp;
    }
    mpz_class dfac;
    mpz_fac_ui(dfac.get_mpz_t(), d);
    sum /= dfac;
    sum.canonicalize();
    return sum;
}

std::mt19937_64 rng(7);

}  // namespace

TEST_CASE("truncated power definition") {
    CHECK(truncated_power(Rational(3), 1, 2) == Rational(4));
    CHECK(truncated_power(Rational(1), 1, 0) == Rational(1));  // (x-i)_+^0 = 1 at x = i
    CHECK(truncated_power(Rational(1, 2), 1, 5) == Rational(0));
    CHECK(truncated_power(Rational(0), 1, 0) == Rational(0));
}

TEST_CASE("spline values against the direct-sum oracle") {
    CHECK(spline_value_tp(1, Rational(1)) == Rational(1));
    CHECK(spline_value_tp(2, Rational(1, 2)) == Rational(1, 8));
    CHECK(spline_value_tp(3, Rational(-1)) == Rational(0));
    CHECK(spline_value_dbc(4, Rational(5, 2)) == Rational(115, 192));
    CHECK(spline_value_dbc(0, Rational(0)) == Rational(1));
    CHECK(spline_value_dbc(0, Rational(1)) == Rational(0));

    for (unsigned d : {1u, 2u, 3u, 5u, 8u, 13u}) {
        std::uniform_int_distribution<long> num(0, 1000 * (static_cast<long>(d) + 1));
        for (int i = 0; i < 100; ++i) {
            Rational x(num(rng), 1000);
            mpq_class expect = oracle_spline(d, x.raw());
            CHECK(spline_value_tp(d, x).raw() == expect);
            CHECK(spline_value_dbc(d, x).raw() == expect);
        }
    }
}

TEST_CASE("symbol values for the worked degrees") {
    const SplineSymbol& s2 = symbol(2);
    REQUIRE(s2.half_bandwidth == 1);
    CHECK(s2.t(0) == Rational(3, 4));
    CHECK(s2.t(1) == Rational(1, 8));

    const SplineSymbol& s4 = symbol(4);
    CHECK(s4.t(0) == Rational(115, 192));
    CHECK(s4.t(1) == Rational(19, 96));
    CHECK(s4.t(2) == Rational(1, 384));

    const SplineSymbol& s5 = symbol(5);
    CHECK(s5.t(0) == Rational(11, 20));
    CHECK(s5.t(1) == Rational(13, 60));
    CHECK(s5.t(2) == Rational(1, 120));

    CHECK_THROWS_AS(symbol(0), std::invalid_argument);
    CHECK_THROWS_AS(symbol(kMaxDegree + 1), std::invalid_argument);
}

TEST_CASE("partition of unity, monotonicity, edge closed form up to degree 30") {
    for (unsigned d = 1; d <= 30; ++d) {
        const SplineSymbol& s = symbol(d);
        Rational sum = s.t(0);
        for (int j = 1; j <= s.half_bandwidth; ++j) {
            sum += Rational(2) * s.t(j);
            CHECK(s.t(j) < s.t(j - 1));  // strict unimodal decay
            CHECK(s.t(j).sign() > 0);
        }
        CHECK(sum == Rational(1));

        Rational edge = (d % 2 == 1) ? Rational(BigInt(1), factorial(d))
                                     : Rational(BigInt(1), factorial(d) * (BigInt(1) << d));
        CHECK(s.t(s.half_bandwidth) == edge);
    }
}

TEST_CASE("symmetry about the support midpoint") {
    std::uniform_int_distribution<long> num(0, 4000);
    for (unsigned d : {2u, 3u, 7u, 10u}) {
        Rational center(static_cast<long>(d) + 1, 2);
        for (int i = 0; i < 50; ++i) {
            Rational s(num(rng), 1000);
            CHECK(spline_value_tp(d, center + s) == spline_value_tp(d, center - s));
        }
    }
}
